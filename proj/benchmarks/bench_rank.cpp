#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "pcrank/pcrank.hpp"

namespace {

// Connected reciprocal matrix with roughly `density` of the pairs present.
pcrank::PCMatrix make_instance(std::size_t n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_entry(-std::log(9.0), std::log(9.0));
    std::bernoulli_distribution keep(density);
    std::vector<pcrank::Entry> e(n * n, pcrank::kMissing);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // The chain i, i+1 keeps every instance connected.
            if (j != i + 1 && !keep(rng)) continue;
            const double c = std::exp(log_entry(rng));
            e[i * n + j] = c;
            e[j * n + i] = 1.0 / c;
        }
    }
    return pcrank::PCMatrix(n, std::move(e));
}

void BM_RankGm(benchmark::State& state) {
    const auto m = make_instance(static_cast<std::size_t>(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(pcrank::rank_gm(m));
}

void BM_RankLls(benchmark::State& state) {
    const auto m = make_instance(static_cast<std::size_t>(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(pcrank::rank_lls(m));
}

void BM_RankHarker(benchmark::State& state) {
    const auto m = make_instance(static_cast<std::size_t>(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(pcrank::rank_harker(m));
}

void BM_Validate(benchmark::State& state) {
    const auto m = make_instance(static_cast<std::size_t>(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(pcrank::validate(m));
}

void BM_ParseSerialize(benchmark::State& state) {
    const std::string text = pcrank::serialize_matrix(make_instance(static_cast<std::size_t>(state.range(0)), 0.5, 1));
    for (auto _ : state) benchmark::DoNotOptimize(pcrank::parse_matrix(text));
}

}  // namespace

BENCHMARK(BM_RankGm)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_RankLls)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_RankHarker)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Validate)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_ParseSerialize)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK_MAIN();
