// Microbenchmarks for the entropy pipeline: union distributions, Shannon
// entropy with exact rational atoms, and the full certificate.
#include <benchmark/benchmark.h>

#include "uclab/constructions.hpp"
#include "uclab/entropy.hpp"

namespace {

const uclab::SubsetDistribution& binom5_uniform() {
  static const uclab::SubsetDistribution d =
      uclab::uniform_distribution(uclab::make_binomial(5, uclab::BinomialMode::AtMost, 3));
  return d;
}

void BM_UnionDistribution(benchmark::State& state) {
  const uclab::SubsetDistribution& d = binom5_uniform();
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::union_distribution(d, d));
  }
}
BENCHMARK(BM_UnionDistribution);

void BM_ShannonEntropy(benchmark::State& state) {
  const uclab::SubsetDistribution u = uclab::union_distribution(binom5_uniform(), binom5_uniform());
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::shannon_entropy(u));
  }
}
BENCHMARK(BM_ShannonEntropy);

void BM_GilmerCertificate(benchmark::State& state) {
  const uclab::SetFamily fam = uclab::make_binomial(5, uclab::BinomialMode::AtMost, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::gilmer_certificate(fam));
  }
}
BENCHMARK(BM_GilmerCertificate);

void BM_EntropyGainScan(benchmark::State& state) {
  const uclab::SetFamily fam = uclab::make_binomial(3, uclab::BinomialMode::AtMost, 2);
  const std::vector<uclab::Rational> grid = uclab::default_delta_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(uclab::entropy_gain_scan(fam, grid));
  }
}
BENCHMARK(BM_EntropyGainScan);

}  // namespace
