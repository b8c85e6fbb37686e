// Serial reference vs OpenMP kernels. Run with --benchmark_filter to pick one.

#include <benchmark/benchmark.h>

#include "tverberg/homology.hpp"
#include "tverberg/search.hpp"

using namespace tverberg;

namespace {

// Instances with no partition force the search to exhaust every first face.
ColoredConfiguration hard_instance(std::uint64_t seed)
{
    const std::vector<std::int64_t> cards{2, 2, 2, 2};
    return random_configuration(3, cards, seed);
}

void BM_SearchSerial(benchmark::State& state)
{
    const auto cfg = hard_instance(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(find_colored_tverberg_serial(cfg, 3));
}

void BM_SearchParallel(benchmark::State& state)
{
    const auto cfg = hard_instance(static_cast<std::uint64_t>(state.range(0)));
    SearchOptions opts;
    opts.workers = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(find_colored_tverberg(cfg, 3, opts));
}

void BM_Campaign(benchmark::State& state)
{
    const std::vector<std::int64_t> cards{5, 2, 2};
    CampaignOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_theorem_instance(Theorem::GeneralizedZV, 2, 3, cards, 40, 1, opts));
}

void BM_Homology(benchmark::State& state)
{
    const auto k = chessboard(6, 5);
    HomologyOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_numbers(k, Coefficients::prime_field(3), opts));
}

}  // namespace

BENCHMARK(BM_SearchSerial)->Args({1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Args({1, 2})->Args({1, 4})->Args({1, 8})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Campaign)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Homology)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
