// Microbenchmarks for interval arithmetic and the inequality verifier.
#include <benchmark/benchmark.h>

#include "uclab/interval.hpp"
#include "uclab/verifier.hpp"

namespace {

void BM_BinaryEntropyInterval(benchmark::State& state) {
  const uclab::Interval x = uclab::of(0.2, 0.2000001);
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::h_i(x));
  }
}
BENCHMARK(BM_BinaryEntropyInterval);

void BM_VerifyKeyLemmaLoose(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::verify_key_lemma(1e-3));
  }
}
BENCHMARK(BM_VerifyKeyLemmaLoose)->Unit(benchmark::kMillisecond);

void BM_VerifyKeyLemmaTight(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::verify_key_lemma(1e-9));
  }
}
BENCHMARK(BM_VerifyKeyLemmaTight)->Unit(benchmark::kMillisecond);

void BM_VerifyRefinement(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::verify_gilmer_refinement(1e-9));
  }
}
BENCHMARK(BM_VerifyRefinement)->Unit(benchmark::kMillisecond);

void BM_ReplayCertificate(benchmark::State& state) {
  const uclab::ProofCertificate cert = uclab::verify_key_lemma(1e-6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::replay_certificate(cert, nullptr));
  }
}
BENCHMARK(BM_ReplayCertificate)->Unit(benchmark::kMillisecond);

void BM_PsiK(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::psi_k(static_cast<int>(state.range(0)), 1e-9));
  }
}
BENCHMARK(BM_PsiK)->Arg(2)->Arg(10);

}  // namespace
