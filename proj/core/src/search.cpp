#include "prismforge/search.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <thread>

#include "prismforge/transforms.hpp"

namespace prismforge {

namespace {

long small(const Int& n, const char* what) {
    if (!n.fits_slong_p() || n < 0)
        throw std::invalid_argument(std::string(what) + ": bound out of range");
    return n.get_si();
}

HeightBounds height_bounds_of(const SearchBounds& b) {
    return {b.point_numerator_bound, b.point_denominator_bound,
            b.coefficient_bound};
}

/// Memoizes compatible_heights per (x, y); each run() call owns one cache.
class HeightsCache {
public:
    explicit HeightsCache(const SearchBounds& b)
        : hb_(height_bounds_of(b)) {}

    const std::vector<Rat>& get(const Int& x, const Int& y) {
        auto key = std::make_pair(x, y);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, compatible_heights(x, y, hb_)).first->second;
    }

private:
    HeightBounds hb_;
    std::map<std::pair<Int, Int>, std::vector<Rat>> cache_;
};

bool all_distinct(const PrismBase& b) {
    std::vector<Rat> v{b.x, b.y, b.z, b.w, b.u, b.v};
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

Int measure_of(const PrismCandidate& c) {
    Rat sum = c.h;
    for (const auto& [name, value] : c.base.condition_lengths()) sum += value;
    return sum.num();
}

/// Scales, classifies and filters one candidate; forwards it to the sink
/// when it clears the configured thresholds.
void emit(const SearchBounds& bounds, const std::string& strategy,
          const PrismBase& base, const Rat& h, std::vector<Rat> params,
          const RecordSink& sink) {
    if (h.sign() <= 0) return;
    if (base.geometry_status == GeometryStatus::INVALID) return;

    PrismCandidate cand = primitive_scale(base, h);
    Rat factor = cand.h / h;
    if (bounds.scale_cap > 0 && factor.num() > bounds.scale_cap) return;
    if (bounds.length_cap > 0) {
        for (const auto& [name, value] : cand.base.condition_lengths())
            if (value.num() > bounds.length_cap) return;
    }
    if (bounds.require_distinct && !all_distinct(cand.base)) return;

    DiagonalReport report = classify(cand);
    int need = bounds.min_square_count > 0 ? bounds.min_square_count
                                           : report.required_count;
    if (report.square_count < need) return;

    SearchRecord rec;
    rec.candidate = std::move(cand);
    rec.report = std::move(report);
    rec.strategy = strategy;
    rec.params = std::move(params);
    rec.measure = measure_of(rec.candidate);
    sink(rec);
}

/// Curve points derived from a scan: each found point, its small multiples
/// and both signs, deduplicated.
std::vector<CurvePoint> expanded_points(const Curve& c,
                                        const SearchBounds& bounds) {
    auto pts = find_points(c, bounds.point_numerator_bound,
                           bounds.point_denominator_bound);
    std::set<std::pair<Rat, Rat>> seen;
    std::vector<CurvePoint> out;
    auto push = [&](const CurvePoint& q) {
        if (q.is_infinity()) return;
        if (seen.insert({q.U(), q.V()}).second) out.push_back(q);
    };
    int depth = std::max(1, bounds.point_multiple_max);
    for (const auto& p : pts) {
        CurvePoint acc = CurvePoint::infinity();
        for (int n = 1; n <= depth; ++n) {
            acc = add(c, acc, p);
            push(acc);
            push(negate(acc));
        }
    }
    return out;
}

std::vector<std::pair<long, long>> coprime_pairs(long hi) {
    // (a, b) with hi >= a > b >= 1, gcd 1, in row-major order
    std::vector<std::pair<long, long>> out;
    for (long a = 2; a <= hi; ++a)
        for (long b = 1; b < a; ++b)
            if (gcd(Int(a), Int(b)) == 1) out.emplace_back(a, b);
    return out;
}

}  // namespace

const char* kite_strategy_name(KiteStrategy s) {
    switch (s) {
        case KiteStrategy::X_FIRST: return "x-first";
        case KiteStrategy::Y_FIRST: return "y-first";
        case KiteStrategy::ZW_FIRST: return "zw-first";
        case KiteStrategy::DIRECT: return "direct";
    }
    throw std::logic_error("kite_strategy_name: unreachable");
}

const char* rhombus_strategy_name(RhombusStrategy s) {
    switch (s) {
        case RhombusStrategy::Z_CURVE: return "z-curve";
        case RhombusStrategy::W_CURVE: return "w-curve";
        case RhombusStrategy::DIRECT: return "direct";
    }
    throw std::logic_error("rhombus_strategy_name: unreachable");
}

std::optional<KiteStrategy> kite_strategy_from_name(const std::string& name) {
    for (KiteStrategy s : {KiteStrategy::X_FIRST, KiteStrategy::Y_FIRST,
                           KiteStrategy::ZW_FIRST, KiteStrategy::DIRECT})
        if (name == kite_strategy_name(s)) return s;
    return std::nullopt;
}

std::optional<RhombusStrategy> rhombus_strategy_from_name(
    const std::string& name) {
    for (RhombusStrategy s : {RhombusStrategy::Z_CURVE, RhombusStrategy::W_CURVE,
                              RhombusStrategy::DIRECT})
        if (name == rhombus_strategy_name(s)) return s;
    return std::nullopt;
}

Sweep trapezium_sweep(const SearchBounds& bounds) {
    auto params = std::make_shared<RationalEnumerator>(
        bounds.param_height_max, Rat(1));
    std::uint64_t n = params->size();
    Sweep sweep;
    sweep.strategy = "trapezium";
    sweep.size = n * n * n;
    sweep.run = [bounds, params, n](std::uint64_t lo, std::uint64_t hi,
                                    const RecordSink& sink) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const Rat& a = params->at(idx / (n * n));
            const Rat& b = params->at((idx / n) % n);
            const Rat& c = params->at(idx % n);
            Rat x = pyth_ratio(a), y = pyth_ratio(b), z = pyth_ratio(c);
            if (!(x > y)) continue;
            Rat v2 = z * z + x * y;
            auto v = rat_sqrt(v2);
            if (!v) continue;
            if (!is_square(v2 + 1)) continue;

            PrismBase base;
            base.kind = ShapeKind::TRAPEZIUM;
            base.x = x; base.y = y; base.z = z;
            base.w = z; base.u = *v; base.v = *v;
            base.params = {a, b, c};
            base.cos_alpha = (x - y) / (2 * z);
            Rat planar = z * z - (x - y) * (x - y) / 4;
            base.geometry_status = planar.sign() > 0
                                       ? GeometryStatus::CONVEX
                                   : planar.is_zero()
                                       ? GeometryStatus::DEGENERATE
                                       : GeometryStatus::INVALID;
            emit(bounds, "trapezium", base, Rat(1), {a, b, c}, sink);
        }
    };
    return sweep;
}

Sweep general_sweep(const SearchBounds& bounds) {
    long hm = small(bounds.param_height_max, "general_sweep");
    // cursor cells are (x, w, v) triples with w <= x and |x - w| < v < x + w
    std::uint64_t total = 0;
    for (long x = 2; x <= hm; ++x)
        for (long w = 1; w <= x; ++w) total += 2 * w - 1;

    Sweep sweep;
    sweep.strategy = "general";
    sweep.size = total;
    sweep.run = [bounds, hm](std::uint64_t lo, std::uint64_t hi,
                             const RecordSink& sink) {
        HeightsCache cache(bounds);
        std::uint64_t idx = 0;
        for (long x = 2; x <= hm; ++x) {
            for (long w = 1; w <= x; ++w) {
                for (long v = x - w + 1; v <= x + w - 1; ++v, ++idx) {
                    if (idx < lo) continue;
                    if (idx >= hi) return;
                    if (v < 1) continue;
                    Rat cos_alpha(Int(x) * x + Int(w) * w - Int(v) * v,
                                  2 * Int(x) * w);
                    for (long y = 1; y <= x; ++y) {
                        for (long z = 1; z <= x; ++z) {
                            if (!(v < y + z && y + z < 2 * x)) continue;
                            // triangle BDC must close (flat is allowed)
                            if (z > v + y || v > z + y || y > v + z) continue;
                            auto base = general_quad_assemble(x, w, cos_alpha,
                                                              y, z);
                            if (!base) continue;
                            for (const Rat& h : cache.get(x, y))
                                emit(bounds, "general", *base, h,
                                     base->params, sink);
                        }
                    }
                }
            }
        }
    };
    return sweep;
}

Sweep cyclic_sweep(const SearchBounds& bounds) {
    auto params = std::make_shared<RationalEnumerator>(
        bounds.param_height_max, Rat(0));
    std::uint64_t n = params->size();
    Sweep sweep;
    sweep.strategy = "cyclic";
    sweep.size = n * n * n;
    sweep.run = [bounds, params, n](std::uint64_t lo, std::uint64_t hi,
                                    const RecordSink& sink) {
        HeightsCache cache(bounds);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const Rat& f = params->at(idx / (n * n));
            const Rat& g = params->at((idx / n) % n);
            const Rat& t = params->at(idx % n);
            if (f < t) continue;  // f <-> t reverses the labeling
            PrismBase base = cyclic_base(f, g, t);
            if (base.geometry_status == GeometryStatus::INVALID) continue;
            if (bounds.require_distinct && !all_distinct(base)) continue;
            if (bounds.length_cap > 0 &&
                (base.x.num() > bounds.length_cap ||
                 base.y.num() > bounds.length_cap ||
                 base.z.num() > bounds.length_cap ||
                 base.w.num() > bounds.length_cap ||
                 base.u.num() > bounds.length_cap ||
                 base.v.num() > bounds.length_cap))
                continue;
            for (const Rat& h : cache.get(base.x.num(), base.y.num()))
                emit(bounds, "cyclic", base, h, {f, g, t}, sink);
        }
    };
    return sweep;
}

Sweep parallelogram_sweep(const SearchBounds& bounds) {
    auto ks = std::make_shared<RationalEnumerator>(bounds.param_height_max,
                                                   Rat(0), Rat(1));
    Sweep sweep;
    sweep.strategy = "parallelogram";
    sweep.size = ks->size();
    sweep.run = [bounds, ks](std::uint64_t lo, std::uint64_t hi,
                             const RecordSink& sink) {
        HeightsCache cache(bounds);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const Rat& k = ks->at(idx);
            auto tr = NamedTransform::make(TransformId::PAR,
                                           {k.num(), k.den()});
            Curve c = curve_of(tr);
            for (const CurvePoint& q : expanded_points(c, bounds)) {
                auto mu = param_of_point(tr, q);
                if (!mu) continue;
                Rat den = *mu * *mu - 1;
                if (den.is_zero()) continue;
                Rat ratio = 2 * (k - *mu) / den;
                if (ratio.sign() <= 0) continue;
                Int x = ratio.num(), y = ratio.den();
                if (bounds.length_cap > 0 &&
                    (x > bounds.length_cap || y > bounds.length_cap))
                    continue;
                auto base = parallelogram_base(x, y, k);
                if (!base) continue;
                for (const Rat& h : cache.get(x, y))
                    emit(bounds, "parallelogram", *base, h,
                         {k, q.U(), q.V()}, sink);
            }
        }
    };
    return sweep;
}

Sweep special_parallelogram_sweep(const SearchBounds& bounds) {
    long hm = small(bounds.param_height_max, "special_parallelogram_sweep");
    auto pairs = std::make_shared<std::vector<std::pair<long, long>>>();
    for (const auto& [p, q] : coprime_pairs(hm))
        if (Int(p) * p > 2 * Int(q) * q) pairs->push_back({p, q});

    Sweep sweep;
    sweep.strategy = "special-parallelogram";
    sweep.size = pairs->size();
    sweep.run = [bounds, pairs](std::uint64_t lo, std::uint64_t hi,
                                const RecordSink& sink) {
        HeightsCache cache(bounds);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            auto [p, q] = (*pairs)[idx];
            PrismBase base = special_parallelogram_base(p, q);
            for (const Rat& h : cache.get(base.x.num(), base.y.num()))
                emit(bounds, "special-parallelogram", base, h,
                     {Rat(p), Rat(q)}, sink);
        }
    };
    return sweep;
}

Sweep kite_sweep(const SearchBounds& bounds, KiteStrategy strategy) {
    std::string name = std::string("kite-") + kite_strategy_name(strategy);

    if (strategy == KiteStrategy::DIRECT) {
        auto params = std::make_shared<RationalEnumerator>(
            bounds.param_height_max, Rat(1));
        std::uint64_t n = params->size();
        Sweep sweep;
        sweep.strategy = name;
        sweep.size = n * n;
        sweep.run = [bounds, params, n, name](std::uint64_t lo,
                                              std::uint64_t hi,
                                              const RecordSink& sink) {
            HeightsCache cache(bounds);
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                const Rat& f = params->at(idx / n);
                const Rat& k = params->at(idx % n);
                auto g = kite_g_from_k(k);
                if (!g) continue;
                if (f > *g) continue;  // canonical orientation f <= g
                PrismBase base = kite_base(f, *g);
                if (bounds.length_cap > 0 &&
                    (base.x.num() > bounds.length_cap ||
                     base.y.num() > bounds.length_cap))
                    continue;
                for (const Rat& h : cache.get(base.x.num(), base.y.num()))
                    emit(bounds, name, base, h, {f, *g}, sink);
            }
        };
        return sweep;
    }

    TransformId tid = strategy == KiteStrategy::X_FIRST ? TransformId::KITE_X
                      : strategy == KiteStrategy::Y_FIRST
                          ? TransformId::KITE_Y
                          : TransformId::KITE_ZW;
    long hm = small(bounds.param_height_max, "kite_sweep");
    auto pairs =
        std::make_shared<std::vector<std::pair<long, long>>>(coprime_pairs(hm));

    Sweep sweep;
    sweep.strategy = name;
    sweep.size = pairs->size();
    sweep.run = [bounds, pairs, tid, name](std::uint64_t lo, std::uint64_t hi,
                                           const RecordSink& sink) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            auto [p, q] = (*pairs)[idx];
            Rat g(p, q);
            auto tr = NamedTransform::make(tid, {p, q});
            Curve c = curve_of(tr);
            for (const CurvePoint& pt : expanded_points(c, bounds)) {
                auto f = param_of_point(tr, pt);
                if (!f || !(*f > Rat(1))) continue;
                Rat h = abs(4 * *f * *f - g * g);
                if (h.is_zero()) continue;
                PrismBase base = kite_base(*f, g);
                // kite_base rescaled the raw quadruple; keep h on the
                // same scale
                Rat s = base.x / (g * (*f * *f + 1));
                emit(bounds, name, base, h * s, {*f, g}, sink);
            }
        }
    };
    return sweep;
}

Sweep rhombus_sweep(const SearchBounds& bounds, RhombusStrategy strategy) {
    std::string name =
        std::string("rhombus-") + rhombus_strategy_name(strategy);
    long hm = small(bounds.param_height_max, "rhombus_sweep");
    auto pairs =
        std::make_shared<std::vector<std::pair<long, long>>>(coprime_pairs(hm));

    Sweep sweep;
    sweep.strategy = name;
    sweep.size = pairs->size();

    if (strategy == RhombusStrategy::DIRECT) {
        sweep.run = [bounds, pairs, name](std::uint64_t lo, std::uint64_t hi,
                                          const RecordSink& sink) {
            HeightsCache cache(bounds);
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                auto [m, n] = (*pairs)[idx];
                PrismBase base = rhombus_base(m, n);
                std::set<Rat> hs;
                for (const Rat& h : cache.get(base.x.num(), base.z.num()))
                    hs.insert(h);
                for (const Rat& h : cache.get(base.x.num(), base.w.num()))
                    hs.insert(h);
                for (const Rat& h : hs)
                    emit(bounds, name, base, h, {Rat(m), Rat(n)}, sink);
            }
        };
        return sweep;
    }

    TransformId tid = strategy == RhombusStrategy::Z_CURVE
                          ? TransformId::RHOM_Z
                          : TransformId::RHOM_W;
    sweep.run = [bounds, pairs, tid, name](std::uint64_t lo, std::uint64_t hi,
                                           const RecordSink& sink) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            auto [b, c] = (*pairs)[idx];
            auto tr = NamedTransform::make(tid, {b, c});
            Curve curve = curve_of(tr);
            Rat S(Int(b) * b + Int(c) * c);
            for (const CurvePoint& pt : expanded_points(curve, bounds)) {
                if (pt.U().is_zero()) continue;
                Rat a2 = pt.V() / pt.U();  // a^2 = V/U
                if (a2.sign() <= 0 || !is_square(a2)) continue;
                Rat h = 2 * abs(a2 * a2 - S * S);
                if (h.is_zero()) continue;

                PrismBase base;
                base.kind = ShapeKind::RHOMBUS;
                base.x = 4 * a2 * S;
                base.y = base.x;
                base.z = 8 * a2 * Rat(Int(b) * b - Int(c) * c);
                base.w = 16 * a2 * Rat(Int(b) * c);
                base.u = base.z;
                base.v = base.w;
                base.params = {Rat(b), Rat(c), a2};
                base.geometry_status = GeometryStatus::CONVEX;
                emit(bounds, name, base, h, base.params, sink);
            }
        }
    };
    return sweep;
}

std::vector<SearchRecord> collect(const Sweep& sweep,
                                  const CursorRange& range) {
    std::vector<SearchRecord> out;
    std::uint64_t hi = std::min<std::uint64_t>(range.end, sweep.size);
    if (range.begin < hi)
        sweep.run(range.begin, hi,
                  [&out](const SearchRecord& r) { out.push_back(r); });
    return out;
}

std::vector<SearchRecord> finalize_records(std::vector<SearchRecord> records) {
    auto key = [](const SearchRecord& r) {
        return std::tuple<const Int&, const Rat&, const Rat&, const Rat&,
                          const Rat&, const Rat&, const Rat&, const Rat&>(
            r.measure, r.candidate.base.x, r.candidate.base.y,
            r.candidate.base.z, r.candidate.base.w, r.candidate.base.u,
            r.candidate.base.v, r.candidate.h);
    };
    std::stable_sort(records.begin(), records.end(),
                     [&key](const SearchRecord& a, const SearchRecord& b) {
                         return key(a) < key(b);
                     });
    records.erase(std::unique(records.begin(), records.end(),
                              [&key](const SearchRecord& a,
                                     const SearchRecord& b) {
                                  return key(a) == key(b) &&
                                         a.strategy == b.strategy;
                              }),
                  records.end());
    return records;
}

std::vector<SearchRecord> run_full(const Sweep& sweep, unsigned workers) {
    if (workers <= 1)
        return finalize_records(collect(sweep, {0, sweep.size}));

    auto ranges = partition(sweep.size, workers);
    std::vector<std::vector<SearchRecord>> parts(ranges.size());
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < ranges.size(); ++i)
        threads.emplace_back(
            [&sweep, &parts, &ranges, i] { parts[i] = collect(sweep, ranges[i]); });
    for (auto& t : threads) t.join();

    std::vector<SearchRecord> all;
    for (auto& p : parts)
        all.insert(all.end(), std::make_move_iterator(p.begin()),
                   std::make_move_iterator(p.end()));
    return finalize_records(std::move(all));
}

std::vector<SearchRecord> search_trapezium(const SearchBounds& bounds) {
    return run_full(trapezium_sweep(bounds));
}
std::vector<SearchRecord> search_general(const SearchBounds& bounds) {
    return run_full(general_sweep(bounds));
}
std::vector<SearchRecord> search_cyclic(const SearchBounds& bounds) {
    return run_full(cyclic_sweep(bounds));
}
std::vector<SearchRecord> search_parallelogram(const SearchBounds& bounds) {
    return run_full(parallelogram_sweep(bounds));
}
std::vector<SearchRecord> search_special_parallelogram(
    const SearchBounds& bounds) {
    return run_full(special_parallelogram_sweep(bounds));
}
std::vector<SearchRecord> search_kite(const SearchBounds& bounds,
                                      KiteStrategy strategy) {
    return run_full(kite_sweep(bounds, strategy));
}
std::vector<SearchRecord> search_rhombus(const SearchBounds& bounds,
                                         RhombusStrategy strategy) {
    return run_full(rhombus_sweep(bounds, strategy));
}

std::vector<SpecialParScanRow> special_par_condition_scan(int n_max,
                                                          int which_curve) {
    if (n_max < 1)
        throw std::invalid_argument("special_par_condition_scan: n_max < 1");
    if (which_curve != 1 && which_curve != 2)
        throw std::invalid_argument(
            "special_par_condition_scan: curve must be 1 or 2");

    auto tr = NamedTransform::make(which_curve == 1 ? TransformId::PAR_E1
                                                    : TransformId::PAR_E2,
                                   {});
    Curve c = curve_of(tr);
    CurvePoint gen = which_curve == 1 ? CurvePoint::affine(Rat(1), Rat(3))
                                      : CurvePoint::affine(Rat(9), Rat(9));

    std::vector<SpecialParScanRow> out;
    CurvePoint acc = CurvePoint::infinity();
    for (int n = 1; n <= n_max; ++n) {
        acc = add(c, acc, gen);
        if (acc.is_infinity()) continue;
        auto r = param_of_point(tr, acc);
        if (!r) continue;
        Int p = r->num(), q = r->den();
        Int p2 = p * p, q2 = q * q;
        // the quartic the walk did not already make square
        Int other = which_curve == 1
                        ? Int(2 * p2 * p2 + 2 * p2 * q2 + 5 * q2 * q2)
                        : Int(2 * p2 * p2 - 6 * p2 * q2 + 5 * q2 * q2);
        out.push_back({n, acc, *r, is_square(Rat(other))});
    }
    return out;
}

std::vector<CursorRange> partition(std::uint64_t total, std::uint64_t parts) {
    if (parts < 1) throw std::invalid_argument("partition: parts < 1");
    std::vector<CursorRange> out;
    std::uint64_t chunk = total / parts, rem = total % parts, pos = 0;
    for (std::uint64_t i = 0; i < parts; ++i) {
        std::uint64_t len = chunk + (i < rem ? 1 : 0);
        out.push_back({pos, pos + len});
        pos += len;
    }
    return out;
}

}  // namespace prismforge
