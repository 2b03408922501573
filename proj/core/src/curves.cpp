#include "prismforge/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prismforge {

Rat Curve::cubic_discriminant() const {
    // disc(x^3 + a x^2 + b x + c)
    const Rat &a = a2, &b = a4, &c = a6;
    return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b -
           4 * b * b * b - 27 * c * c;
}

Rat Curve::rhs(const Rat& U) const {
    return ((U + a2) * U + a4) * U + a6;
}

std::string CurvePoint::str() const {
    if (inf_) return "inf";
    return "(" + U_.str() + ", " + V_.str() + ")";
}

bool on_curve(const Curve& c, const CurvePoint& p) {
    if (p.is_infinity()) return true;
    return p.V() * p.V() == c.rhs(p.U());
}

CurvePoint negate(const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return CurvePoint::affine(p.U(), -p.V());
}

CurvePoint add(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    Rat lambda;
    if (p.U() == q.U()) {
        if (p.V() == -q.V()) return CurvePoint::infinity();
        // tangent
        lambda = (3 * p.U() * p.U() + 2 * c.a2 * p.U() + c.a4) / (2 * p.V());
    } else {
        lambda = (q.V() - p.V()) / (q.U() - p.U());
    }
    Rat u3 = lambda * lambda - c.a2 - p.U() - q.U();
    Rat v3 = lambda * (p.U() - u3) - p.V();
    return CurvePoint::affine(u3, v3);
}

CurvePoint mul(const Curve& c, long n, const CurvePoint& p) {
    if (n < 0) return mul(c, -n, negate(p));
    CurvePoint acc = CurvePoint::infinity();
    CurvePoint base = p;
    while (n > 0) {
        if (n & 1) acc = add(c, acc, base);
        base = add(c, base, base);
        n >>= 1;
    }
    return acc;
}

namespace {

Int eval_poly(const std::vector<Int>& c, const Int& x) {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Approximate real roots of a low-degree polynomial, coefficients
// normalized to double. Recursion on the derivative gives monotone
// brackets; accuracy only affects which integer candidates get probed,
// never correctness (candidates are verified exactly).
std::vector<double> approx_real_roots(std::vector<double> c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    int deg = static_cast<int>(c.size()) - 1;
    if (deg == 1) return {-c[0] / c[1]};
    std::vector<double> d(deg);
    for (int i = 1; i <= deg; ++i) d[i - 1] = c[i] * i;
    auto crit = approx_real_roots(d);
    double m = 0;
    for (int i = 0; i < deg; ++i) m = std::max(m, std::fabs(c[i] / c[deg]));
    double bound = 1.0 + m;
    std::vector<double> xs = {-bound};
    for (double x : crit)
        if (x > -bound && x < bound) xs.push_back(x);
    xs.push_back(bound);
    std::sort(xs.begin(), xs.end());
    auto eval = [&](double x) {
        double acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        double a = xs[i], b = xs[i + 1];
        double fa = eval(a), fb = eval(b);
        if (fa == 0) roots.push_back(a);
        if (fa * fb > 0) continue;
        for (int it = 0; it < 200 && b - a > 1e-12 * (1 + std::fabs(a)); ++it) {
            double mid = 0.5 * (a + b);
            double fm = eval(mid);
            if (fm == 0) { a = b = mid; break; }
            if (fa * fm <= 0) b = mid; else { a = mid; fa = fm; }
        }
        roots.push_back(0.5 * (a + b));
    }
    return roots;
}

std::vector<double> normalized_doubles(const std::vector<Int>& c) {
    long max_exp = 0;
    bool any = false;
    for (const Int& v : c) {
        if (v == 0) continue;
        long e;
        mpz_get_d_2exp(&e, v.get_mpz_t());
        if (!any || e > max_exp) max_exp = e;
        any = true;
    }
    std::vector<double> out(c.size(), 0.0);
    if (!any) return out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        long e;
        double mant = mpz_get_d_2exp(&e, c[i].get_mpz_t());
        long shift = e - max_exp;
        out[i] = (shift < -1000) ? 0.0 : std::ldexp(mant, static_cast<int>(shift));
    }
    return out;
}

// Integer roots of an integer polynomial (coefficients ascending).
// Approximate isolation plus exact binary search and verification.
std::vector<Int> integer_roots(std::vector<Int> c) {
    std::vector<Int> roots;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.size() <= 1) return roots;
    while (c[0] == 0) {
        roots.push_back(0);
        c.erase(c.begin());
        if (c.size() <= 1) {
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            return roots;
        }
        break;  // multiplicity does not matter for root collection
    }
    auto approx = approx_real_roots(normalized_doubles(c));
    auto try_candidate = [&](const Int& x) {
        if (eval_poly(c, x) == 0) roots.push_back(x);
    };
    // Exact binary search around each approximate root.
    for (double r : approx) {
        if (!std::isfinite(r)) continue;
        double fl = std::floor(r);
        Int base(static_cast<long>(fl));
        for (long d = -2; d <= 2; ++d) try_candidate(base + d);
        // widen with exact bisection in case the approximation drifted
        Int lo = base - 2, hi = base + 2;
        Int flo = eval_poly(c, lo), fhi = eval_poly(c, hi);
        if (sgn(flo) != 0 && sgn(fhi) != 0 && sgn(flo) != sgn(fhi)) {
            while (hi - lo > 1) {
                Int mid = (lo + hi) / 2;
                Int fm = eval_poly(c, mid);
                if (fm == 0) { roots.push_back(mid); break; }
                if (sgn(fm) == sgn(flo)) { lo = mid; flo = fm; }
                else hi = mid;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

struct IntegralModel {
    Int e;          // scale: (U, V) -> (U e^2, V e^3)
    Int A, B, C;    // v^2 = u^3 + A u^2 + B u + C
};

IntegralModel integral_model(const Curve& c) {
    Int e = 1;
    e = lcm(e, c.a2.den());
    e = lcm(e, c.a4.den());
    e = lcm(e, c.a6.den());
    // a2 e^2, a4 e^4, a6 e^6 are integral since den | e
    IntegralModel m;
    m.e = e;
    m.A = (c.a2 * Rat(e * e)).num();
    m.B = (c.a4 * Rat(e * e * e * e)).num();
    m.C = (c.a6 * Rat(e * e * e * e * e * e)).num();
    return m;
}

int order_up_to(const Curve& c, const CurvePoint& p, int cap) {
    CurvePoint acc = p;
    for (int k = 1; k <= cap; ++k) {
        if (acc.is_infinity()) return k;
        acc = add(c, acc, p);
    }
    return 0;  // not torsion within cap
}

}  // namespace

bool TorsionInfo::contains(const CurvePoint& p) const {
    for (const auto& [q, o] : points)
        if (q == p) return true;
    return false;
}

TorsionInfo torsion(const Curve& c) {
    if (c.singular()) throw std::invalid_argument("torsion: singular curve");
    auto m = integral_model(c);
    const Int e2 = m.e * m.e, e3 = e2 * m.e;

    std::vector<CurvePoint> candidates;
    auto push_integral_xy = [&](const Int& x, const Int& y) {
        candidates.push_back(
            CurvePoint::affine(Rat(x, e2), Rat(y, e3)));
    };
    auto points_above_x = [&](const Int& x) {
        Int rhs = eval_poly({m.C, m.B, m.A, Int(1)}, x);
        if (rhs < 0) return;
        auto r = isqrt(rhs);
        if (!r.exact) return;
        push_integral_xy(x, r.root);
        if (r.root != 0) push_integral_xy(x, -r.root);
    };

    // order 2: rational roots of the cubic
    std::vector<Int> two_tors = integer_roots({m.C, m.B, m.A, Int(1)});
    for (const Int& r : two_tors) push_integral_xy(r, 0);

    // order 3: psi_3 = 3x^4 + 4Ax^3 + 6Bx^2 + 12Cx + (4AC - B^2)
    for (const Int& x : integer_roots(
             {4 * m.A * m.C - m.B * m.B, 12 * m.C, 6 * m.B, 4 * m.A, Int(3)}))
        points_above_x(x);

    // successive halvings: x-coords of P with 2P = (r, *) satisfy
    // x^4 - 4rx^3 - (2B + 4Ar)x^2 - (8C + 4Br)x + (B^2 - 4AC - 4Cr) = 0
    auto halve_above = [&](const Int& r) {
        return integer_roots({m.B * m.B - 4 * m.A * m.C - 4 * m.C * r,
                              -(8 * m.C + 4 * m.B * r),
                              -(2 * m.B + 4 * m.A * r), -4 * r, Int(1)});
    };
    std::vector<Int> layer = two_tors;  // orders 2 -> 4 -> 8
    for (int depth = 0; depth < 2; ++depth) {
        std::vector<Int> next;
        for (const Int& r : layer)
            for (const Int& x : halve_above(r)) {
                points_above_x(x);
                next.push_back(x);
            }
        layer = next;
    }
    // halvings of 3-torsion give order 6 and 12
    {
        std::vector<Int> xs3;
        for (const auto& p : candidates) {
            if (p.is_infinity()) continue;
            Rat u = p.U() * Rat(e2);
            if (u.is_integer()) xs3.push_back(u.num());
        }
        std::vector<Int> cur;
        for (const Int& x : xs3) cur.push_back(x);
        for (int depth = 0; depth < 2; ++depth) {
            std::vector<Int> next;
            for (const Int& r : cur)
                for (const Int& x : halve_above(r)) {
                    points_above_x(x);
                    next.push_back(x);
                }
            cur = next;
        }
    }

    // certify and close under the group law
    std::vector<std::pair<CurvePoint, int>> certified;
    certified.emplace_back(CurvePoint::infinity(), 1);
    auto admit = [&](const CurvePoint& p) {
        for (const auto& [q, o] : certified)
            if (q == p) return;
        if (!on_curve(c, p)) return;
        int o = order_up_to(c, p, 12);
        if (o > 0) certified.emplace_back(p, o);
    };
    for (const auto& p : candidates) admit(p);
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = certified;
        for (const auto& [p, op] : snapshot)
            for (const auto& [q, oq] : snapshot) {
                CurvePoint s = add(c, p, q);
                std::size_t before = certified.size();
                admit(s);
                if (certified.size() != before) grew = true;
            }
    }

    TorsionInfo info;
    info.points = std::move(certified);
    std::size_t n = info.points.size();
    int exponent = 1;
    for (const auto& [p, o] : info.points) exponent = std::max(exponent, o);
    if (n == 1)
        info.structure_label = "trivial";
    else if (static_cast<std::size_t>(exponent) == n)
        info.structure_label = "Z" + std::to_string(n);
    else if (static_cast<std::size_t>(2 * exponent) == n)
        info.structure_label = "Z2xZ" + std::to_string(exponent);
    else
        info.structure_label = "unknown";
    return info;
}

std::vector<CurvePoint> find_points(const Curve& c, const Int& numerator_bound,
                                    const Int& denominator_bound) {
    if (numerator_bound < 1 || denominator_bound < 1)
        throw std::invalid_argument("find_points: bounds must be >= 1");
    std::vector<CurvePoint> out;
    const bool integral =
        c.a2.is_integer() && c.a4.is_integer() && c.a6.is_integer();
    const Int A = c.a2.num(), B = c.a4.num(), C = c.a6.num();
    for (Int e = 1; e <= denominator_bound; ++e) {
        const Int e2 = e * e;
        const Int mmax = numerator_bound * e2;
        const Int e4 = e2 * e2, e6 = e4 * e2;
        for (Int mnum = -mmax; mnum <= mmax; ++mnum) {
            if (gcd(mnum, e) != 1) continue;
            if (integral) {
                // e^6 * rhs(m/e^2) = m^3 + A m^2 e^2 + B m e^4 + C e^6
                Int val = ((mnum + A * e2) * mnum + B * e4) * mnum + C * e6;
                if (val < 0) continue;
                if (!mpz_perfect_square_p(val.get_mpz_t())) continue;
                out.push_back(CurvePoint::affine(
                    Rat(mnum, e2), Rat(isqrt(val).root, e2 * e)));
            } else {
                Rat U(mnum, e2);
                auto v = rat_sqrt(c.rhs(U));
                if (!v) continue;
                out.push_back(CurvePoint::affine(U, *v));
            }
        }
    }
    return out;
}

CurvePoint combine(const Curve& c, const GeneratorSet& gens,
                   const std::vector<long>& coeffs,
                   const CurvePoint& torsion_pt) {
    if (coeffs.size() != gens.generators.size())
        throw std::invalid_argument("combine: coefficient count mismatch");
    for (long n : coeffs)
        if (std::labs(n) > gens.coefficient_bound)
            throw std::invalid_argument("combine: coefficient out of bound");
    CurvePoint acc = torsion_pt;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        acc = add(c, acc, mul(c, coeffs[i], gens.generators[i]));
    return acc;
}

}  // namespace prismforge
