// Microbenchmarks for the set-family primitives on realistic inputs.
#include <benchmark/benchmark.h>

#include "uclab/constructions.hpp"
#include "uclab/family.hpp"

namespace {

const uclab::SetFamily& witness_family() {
  static const uclab::SetFamily fam = uclab::make_S12_4();
  return fam;
}

void BM_UnionClosureStep(benchmark::State& state) {
  const uclab::SetFamily& fam = witness_family();
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::union_closure_step(fam));
  }
}
BENCHMARK(BM_UnionClosureStep)->Unit(benchmark::kMillisecond);

void BM_IsUnionClosed(benchmark::State& state) {
  const uclab::SetFamily& fam = witness_family();
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::is_union_closed(fam));
  }
}
BENCHMARK(BM_IsUnionClosed)->Unit(benchmark::kMillisecond);

void BM_FrequencyProfile(benchmark::State& state) {
  const uclab::SetFamily& fam = witness_family();
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::frequency_profile(fam));
  }
}
BENCHMARK(BM_FrequencyProfile);

void BM_ParseSerializeRoundTrip(benchmark::State& state) {
  const std::string text = uclab::serialize_family(witness_family());
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::parse_family(text));
  }
}
BENCHMARK(BM_ParseSerializeRoundTrip)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
