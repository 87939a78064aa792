#include <benchmark/benchmark.h>

#include "quadgen/construct.hpp"
#include "quadgen/reduced.hpp"
#include "quadgen/search.hpp"

using namespace quadgen;

static void BM_HminImaginary(benchmark::State& state) {
    const auto ds = fundamental_range(-state.range(0) - 1000, -state.range(0));
    for (auto _ : state)
        for (auto D : ds) benchmark::DoNotOptimize(hmin(D).H);
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ds.size()));
}
BENCHMARK(BM_HminImaginary)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

static void BM_HminReal(benchmark::State& state) {
    const auto ds = fundamental_range(state.range(0), state.range(0) + 1000);
    for (auto _ : state)
        for (auto D : ds) benchmark::DoNotOptimize(hmin(D).H);
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ds.size()));
}
BENCHMARK(BM_HminReal)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

static void BM_HminReduced(benchmark::State& state) {
    const auto ds = fundamental_range(state.range(0), state.range(0) + 1000);
    for (auto _ : state)
        for (auto D : ds) benchmark::DoNotOptimize(hmin_reduced(D).H);
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ds.size()));
}
BENCHMARK(BM_HminReduced)->Arg(10'000)->Arg(1'000'000)->Arg(10'000'000);

static void BM_EnumerateReal(benchmark::State& state) {
    const auto ds = fundamental_range(state.range(0), state.range(0) + 200);
    for (auto _ : state)
        for (auto D : ds) benchmark::DoNotOptimize(enumerate_real(D).size());
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ds.size()));
}
BENCHMARK(BM_EnumerateReal)->Arg(10'000)->Arg(1'000'000);

static void BM_MepsExceptions(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(m_eps_exceptions(state.range(0), Rational(1, 10)).size());
}
BENCHMARK(BM_MepsExceptions)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
