#include <benchmark/benchmark.h>

#include "prismforge/curves.hpp"
#include "prismforge/heights.hpp"
#include "prismforge/search.hpp"

using namespace prismforge;

namespace {

void BM_Isqrt(benchmark::State& state) {
    Int n = Int(1) << static_cast<int>(state.range(0));
    n -= 1;
    for (auto _ : state) benchmark::DoNotOptimize(isqrt(n).root.get_ui());
}
BENCHMARK(BM_Isqrt)->Arg(64)->Arg(256)->Arg(1024);

void BM_CurveAdd(benchmark::State& state) {
    Curve c = height_curve(5, 2);
    auto p = CurvePoint::affine(Rat(2), Rat(18));
    auto q = CurvePoint::affine(Rat(-10), Rat(30));
    for (auto _ : state) {
        auto r = add(c, p, q);
        benchmark::DoNotOptimize(r);
        p = r;  // grow coordinates so the cost stays realistic
        if (p.is_infinity()) p = CurvePoint::affine(Rat(2), Rat(18));
    }
}
BENCHMARK(BM_CurveAdd)->Iterations(2000);

void BM_FindPoints(benchmark::State& state) {
    Curve c = height_curve(5, 2);
    Int bound(state.range(0));
    for (auto _ : state) {
        auto pts = find_points(c, bound, Int(1));
        benchmark::DoNotOptimize(pts.size());
    }
}
BENCHMARK(BM_FindPoints)->Arg(100)->Arg(1000)->Arg(10000);

void BM_CompatibleHeights(benchmark::State& state) {
    HeightBounds bounds;
    bounds.numerator_bound = state.range(0);
    bounds.denominator_bound = 1;
    for (auto _ : state) {
        auto hs = compatible_heights(5, 2, bounds);
        benchmark::DoNotOptimize(hs.size());
    }
}
BENCHMARK(BM_CompatibleHeights)->Arg(100)->Arg(1000);

void BM_TrapeziumSweep(benchmark::State& state) {
    SearchBounds bounds;
    bounds.param_height_max = state.range(0);
    for (auto _ : state) {
        auto records = search_trapezium(bounds);
        benchmark::DoNotOptimize(records.size());
    }
}
BENCHMARK(BM_TrapeziumSweep)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
