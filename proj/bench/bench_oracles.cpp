// Serial reference vs OpenMP kernels.  Thread counts are the benchmark
// argument; 0 selects the serial reference.

#include <benchmark/benchmark.h>

#include "cascade/census.hpp"

namespace {

void BM_FullOracle(benchmark::State& state) {
  const cascade::Rank rank(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    if (threads == 0) {
      benchmark::DoNotOptimize(cascade::serial::oracle_full(rank));
    } else {
      benchmark::DoNotOptimize(cascade::oracle_full(rank, {threads, 4}));
    }
  }
}

void BM_SupportWalk(benchmark::State& state) {
  const cascade::Rank rank(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  const auto region = cascade::Region::trapezoid(rank);
  for (auto _ : state) {
    if (threads == 0) {
      benchmark::DoNotOptimize(cascade::serial::count_supports(region, 4));
    } else {
      benchmark::DoNotOptimize(cascade::count_supports(region, 4, threads));
    }
  }
}

}  // namespace

BENCHMARK(BM_FullOracle)->ArgsProduct({{2, 3}, {0, 1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SupportWalk)->ArgsProduct({{3, 5}, {0, 1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
