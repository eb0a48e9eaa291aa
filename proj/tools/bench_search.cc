// Serial reference vs OpenMP search over all allocations.
//   ./bench_search --benchmark_filter=P2
#include <benchmark/benchmark.h>
#include <omp.h>

#include "wef/fixtures.h"
#include "wef/optimize.h"

namespace {

using wef::ObjectiveKind;

const wef::Instance& ClosedFormInstance() {
  static const wef::Instance instance =
      wef::GenRandom(7, 4, 7, 20, wef::WeightMode::kIntegerRange);
  return instance;
}

const wef::Instance& LpInstance() {
  static const wef::Instance instance =
      wef::GenRandom(7, 3, 5, 20, wef::WeightMode::kEqual);
  return instance;
}

void BM_SearchP2Serial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wef::SearchAllocationsSerial(ClosedFormInstance(), ObjectiveKind::kP2));
  }
}

void BM_SearchP2Parallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wef::SearchAllocations(ClosedFormInstance(), ObjectiveKind::kP2));
  }
}

void BM_SearchP4Serial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wef::SearchAllocationsSerial(LpInstance(), ObjectiveKind::kP4));
  }
}

void BM_SearchP4Parallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wef::SearchAllocations(LpInstance(), ObjectiveKind::kP4));
  }
}

}  // namespace

BENCHMARK(BM_SearchP2Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchP2Parallel)
    ->RangeMultiplier(2)
    ->Range(1, 8)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_SearchP4Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchP4Parallel)
    ->RangeMultiplier(2)
    ->Range(1, 8)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
