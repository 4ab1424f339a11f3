#include <benchmark/benchmark.h>

#include "talc/combinat/census.hpp"
#include "talc/paths/monotonicity.hpp"
#include "talc/paths/path_word.hpp"
#include "talc/recurrence/array.hpp"
#include "talc/recurrence/catalog.hpp"

using namespace talc;

static void BM_BuildArray(benchmark::State& state) {
    const auto spec = catalog_lookup("lr-lah", {.l = 3, .r = 2});
    const long max_n = state.range(0);
    for (auto _ : state) {
        auto array = build_array(spec, max_n);
        benchmark::DoNotOptimize(array);
    }
}
BENCHMARK(BM_BuildArray)->Arg(16)->Arg(32)->Arg(64);

static void BM_EnumeratePaths(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        auto paths = enumerate_paths(Cell{1, 1}, Cell{1 + n / 2, 1 + n});
        benchmark::DoNotOptimize(paths);
    }
}
BENCHMARK(BM_EnumeratePaths)->Arg(10)->Arg(14)->Arg(18);

static void BM_PathSum(benchmark::State& state) {
    const auto weights = catalog_lookup("eulerian").weights;
    const long n = state.range(0);
    for (auto _ : state) {
        auto s = path_sum(Cell{n / 2, n}, weights, Cell{1, 0});
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_PathSum)->Arg(10)->Arg(12)->Arg(14);

static void BM_LeaderCensus(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto census = leader_census(n);
        benchmark::DoNotOptimize(census);
    }
}
BENCHMARK(BM_LeaderCensus)->Arg(6)->Arg(7)->Arg(8);

static void BM_WeightMonotoneSweep(benchmark::State& state) {
    const auto weights = catalog_lookup("stirling-subset").weights;
    const long n = state.range(0);
    const unsigned jobs = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        auto report = verify_weight_monotone(n / 2, n, weights, Cell{0, 0}, jobs);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_WeightMonotoneSweep)->Args({8, 1})->Args({8, 4})->Args({10, 1})->Args({10, 4});

BENCHMARK_MAIN();
