// Microbenchmarks for exhaustive enumeration and the Monte Carlo experiment.
#include <benchmark/benchmark.h>

#include "uclab/constructions.hpp"
#include "uclab/enumerate.hpp"

namespace {

void BM_EnumerateBrute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::enumerate_union_closed(n));
  }
}
BENCHMARK(BM_EnumerateBrute)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EnumeratePruned(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::enumerate_union_closed_pruned(n));
  }
}
BENCHMARK(BM_EnumeratePruned)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CertificateCoverage(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::certificate_coverage(3));
  }
}
BENCHMARK(BM_CertificateCoverage)->Unit(benchmark::kMillisecond);

void BM_ApproxUc(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::approx_uc_experiment(256, 2, 100, 42));
  }
}
BENCHMARK(BM_ApproxUc)->Unit(benchmark::kMillisecond);

}  // namespace
