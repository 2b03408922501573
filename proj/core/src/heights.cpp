#include "prismforge/heights.hpp"

#include <algorithm>
#include <stdexcept>

namespace prismforge {

namespace {

bool is_torsion(const Curve& c, const CurvePoint& p) {
    CurvePoint acc = p;
    for (int k = 1; k <= 12; ++k) {
        if (acc.is_infinity()) return true;
        acc = add(c, acc, p);
    }
    return false;
}

// a = V / (y (U + x^2)); the height parameter of a curve point.
std::optional<Rat> height_param(const Int& x, const Int& y,
                                const CurvePoint& p) {
    if (p.is_infinity()) return std::nullopt;
    Rat den = Rat(y) * (p.U() + Rat(x * x));
    if (den.is_zero()) return std::nullopt;
    return p.V() / den;
}

std::optional<Rat> height_of_param(const Int& x, const Rat& a) {
    if (a.is_zero() || a == Rat(1) || a == Rat(-1)) return std::nullopt;
    Rat pa = pyth_ratio(a);
    if (pa.is_zero()) return std::nullopt;
    return abs(Rat(x) / pa);
}

bool both_square(const Int& x, const Int& y, const Rat& h) {
    return is_square(Rat(x * x) + h * h) && is_square(Rat(y * y) + h * h);
}

}  // namespace

Curve height_curve(const Int& x, const Int& y) {
    if (x < 1 || y < 1)
        throw std::invalid_argument("height_curve: lengths must be >= 1");
    Rat rx(x), ry(y);
    return {rx * rx + ry * ry, rx * rx * ry * ry, Rat(0)};
}

std::set<Rat> heights_from_point(const Int& x, const Int& y,
                                 const CurvePoint& p) {
    Curve c = height_curve(x, y);
    if (p.is_infinity() || is_torsion(c, p))
        throw std::invalid_argument("heights_from_point: torsion input");
    std::set<Rat> out;
    for (const auto& [t, order] : torsion(c).points) {
        CurvePoint q = add(c, p, t);
        auto a = height_param(x, y, q);
        if (!a) continue;
        auto h = height_of_param(x, *a);
        if (!h) continue;
        if (both_square(x, y, *h)) out.insert(*h);
    }
    return out;
}

std::vector<Rat> compatible_heights(const Int& x, const Int& y,
                                    const HeightBounds& bounds) {
    Curve c = height_curve(x, y);
    TorsionInfo tors;
    if (c.singular()) {
        // x = y collapses two cubic roots; the smooth locus still carries
        // the group law, with no finite torsion certified here.
        tors.points.emplace_back(CurvePoint::infinity(), 1);
        tors.structure_label = "trivial";
    } else {
        tors = torsion(c);
    }

    auto pts = find_points(c, bounds.numerator_bound, bounds.denominator_bound);

    // keep non-torsion points only, smallest-coordinate first
    std::vector<CurvePoint> free_pts;
    for (const auto& p : pts) {
        if (p.V().is_zero()) continue;
        if (tors.contains(p) || tors.contains(negate(p))) continue;
        if (is_torsion(c, p)) continue;
        free_pts.push_back(p);
    }
    std::sort(free_pts.begin(), free_pts.end(),
              [](const CurvePoint& a, const CurvePoint& b) {
                  return a.U().height() < b.U().height();
              });

    // drop points dependent on an already-kept generator: P = a*G + T
    std::vector<CurvePoint> gens;
    for (const auto& p : free_pts) {
        if (gens.size() >= 4) break;
        bool dependent = false;
        for (const auto& g : gens) {
            for (int a = -8; a <= 8 && !dependent; ++a) {
                if (a == 0) continue;
                CurvePoint ag = mul(c, a, g);
                for (const auto& [t, order] : tors.points) {
                    CurvePoint q = add(c, ag, t);
                    if (q == p) { dependent = true; break; }
                }
            }
            if (dependent) break;
        }
        if (!dependent) gens.push_back(p);
    }

    std::set<Rat> hs;
    if (!gens.empty()) {
        const int L = bounds.coefficient_bound;
        const long span = 2 * static_cast<long>(L) + 1;
        long total = 1;
        for (std::size_t i = 0; i < gens.size(); ++i) total *= span;
        for (long idx = 0; idx < total; ++idx) {
            long rem = idx;
            CurvePoint acc = CurvePoint::infinity();
            for (const auto& g : gens) {
                long n = rem % span - L;
                rem /= span;
                acc = add(c, acc, mul(c, n, g));
            }
            for (const auto& [t, order] : tors.points) {
                CurvePoint q = add(c, acc, t);
                auto a = height_param(x, y, q);
                if (!a) continue;
                auto h = height_of_param(x, *a);
                if (!h) continue;
                if (both_square(x, y, *h)) hs.insert(*h);
            }
        }
    }
    return {hs.begin(), hs.end()};
}

std::vector<Rat> filter_heights(const std::vector<Rat>& hs,
                                const std::vector<Int>& lengths) {
    std::vector<Rat> out;
    for (const Rat& h : hs) {
        bool ok = true;
        for (const Int& t : lengths)
            if (!is_square(Rat(t * t) + h * h)) { ok = false; break; }
        if (ok) out.push_back(h);
    }
    return out;
}

}  // namespace prismforge
