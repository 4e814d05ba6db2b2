// Serial reference kernels against the OpenMP versions. The second argument
// of the parallel benchmarks is the worker count.

#include <benchmark/benchmark.h>

#include "mutanta/enumeration.h"
#include "mutanta/reference.h"
#include "mutanta/verify.h"

namespace {

using namespace mutanta;

void BM_TriangulationsSerial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::enumerate_triangulations(m));
  }
}
BENCHMARK(BM_TriangulationsSerial)->Arg(11)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_TriangulationsParallel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_triangulations(m, {}, jobs));
  }
}
BENCHMARK(BM_TriangulationsParallel)
    ->ArgsProduct({{11, 12}, {1, 2, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_MutationClassSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::enumerate_mutation_class(n));
  }
}
BENCHMARK(BM_MutationClassSerial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_MutationClassParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_mutation_class(n, {}, jobs));
  }
}
BENCHMARK(BM_MutationClassParallel)
    ->ArgsProduct({{9, 10}, {1, 2, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_CommutationSerial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::commutation_violations(m));
  }
}
BENCHMARK(BM_CommutationSerial)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_CommutationParallel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_commutation(m - 3, {}, jobs));
  }
}
BENCHMARK(BM_CommutationParallel)
    ->ArgsProduct({{10}, {1, 2, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
