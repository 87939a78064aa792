#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "quadgen/intarith.hpp"
#include "quadgen/quadpoly.hpp"

using namespace quadgen;

static void BM_Kronecker(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<i64> dist(-1'000'000'000, 1'000'000'000);
    std::vector<std::pair<i64, i64>> args(1024);
    for (auto& [a, n] : args) {
        a = dist(rng);
        n = dist(rng) | 1;
    }
    for (auto _ : state)
        for (auto [a, n] : args) benchmark::DoNotOptimize(kronecker(a, n));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(args.size()));
}
BENCHMARK(BM_Kronecker);

static void BM_IsPrime(benchmark::State& state) {
    u64 n = 1'000'000'000'000'000'003ULL;
    for (auto _ : state) benchmark::DoNotOptimize(is_prime(n++));
}
BENCHMARK(BM_IsPrime);

static void BM_Isqrt(benchmark::State& state) {
    u64 n = 1ULL << 62;
    for (auto _ : state) benchmark::DoNotOptimize(isqrt(n++));
}
BENCHMARK(BM_Isqrt);

static void BM_DiscN(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<i64> coeffs(n + 1);
    for (int i = 0; i <= n; ++i) coeffs[i] = (i % 2 ? -1 : 1) * (997 + 31 * i);
    coeffs[0] = 1;
    const GenPoly f(coeffs);
    for (auto _ : state) benchmark::DoNotOptimize(en_inequality_check(f));
}
BENCHMARK(BM_DiscN)->DenseRange(2, 6);
