#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uclab/family.hpp"

namespace uclab {

// A probability distribution on subsets of [n] with exact rational weights.
class SubsetDistribution {
public:
  using Atom = std::pair<Bitset, Rational>;

  // Validates: atoms distinct, weights positive, weights sum to exactly 1.
  SubsetDistribution(GroundSet ground, std::vector<Atom> atoms);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }

private:
  GroundSet ground_;
  std::vector<Atom> atoms_;  // sorted by bitset value
};

enum class Provenance { ExactRationalWeights, Floating };

// Entropy in bits together with a computed upper bound on the accumulated
// floating-point error of the evaluation.
struct EntropyValue {
  double bits = 0.0;
  double err = 0.0;
  Provenance provenance = Provenance::ExactRationalWeights;
};

SubsetDistribution uniform_distribution(const SetFamily& f);

// Brings the weights to a common denominator D and evaluates
//   H = log2(D) - (1/D) * sum_i c_i * log2(c_i)
// so the only inexact steps are the final logarithms and the summation.
EntropyValue shannon_entropy(const SubsetDistribution& d);

// Distribution of A u B for independent A ~ d1, B ~ d2.
SubsetDistribution union_distribution(const SubsetDistribution& d1,
                                      const SubsetDistribution& d2);

enum class Verdict { ProvedNotUnionClosed, Inconclusive };

struct CertificateReport {
  int n = 0;
  std::uint64_t family_size = 0;
  EntropyValue h_a;      // entropy of a uniform draw from F: exactly log2 |F|
  EntropyValue h_aub;    // entropy of the union of two independent draws
  Rational max_fraction; // from the frequency profile
  Verdict verdict = Verdict::Inconclusive;
};

// Entropy certificate of non-union-closedness: if H(A u B) > log2 |F| for
// iid uniform A, B, then |F u F| > |F|, so F is not union-closed.  The
// verdict is ProvedNotUnionClosed only when the gap clears both computed
// error bounds; the test is sound but not complete.
CertificateReport gilmer_certificate(const SetFamily& f);

std::string certificate_to_json(const CertificateReport& r);

struct GilmerRatio {
  double ratio = 0.0;      // H(A u B) / H(A)
  Rational max_marginal;   // max_i Pr[i in A], exact
};

// Requires H(d) > 0 (point masses are rejected).
GilmerRatio gilmer_ratio(const SubsetDistribution& d);

// True iff |F u F| >= |F|^exponent (threshold evaluated in floating point).
bool power_corollary_check(const SetFamily& f, double exponent);

// The delta-perturbed draw: Pr[X] = (1-delta) Pr[A = X] + delta Pr[AuB = X]
// with A, B iid uniform on F.  Exact atomwise mixture; delta in [0,1], and
// the endpoints return the respective pure distribution exactly.
SubsetDistribution perturbed_distribution(const SetFamily& f, const Rational& delta);

struct GainRow {
  Rational delta;
  double gain = 0.0;  // H(A^delta) - log2 |F|
};

struct GainScan {
  std::vector<GainRow> rows;
  std::size_t best = 0;  // index of the largest gain
};

// Requires F not union-closed (the scan certifies entropy can strictly
// increase; on a union-closed family that question is flagged, not computed).
// Deltas must lie in (0, 1].
GainScan entropy_gain_scan(const SetFamily& f, const std::vector<Rational>& deltas);

// { 2^-k : k = 1..20 }
std::vector<Rational> default_delta_grid();

}  // namespace uclab
