#pragma once

#include <cstdint>
#include <vector>

#include "uclab/family.hpp"
#include "uclab/rng.hpp"

namespace uclab {

// Union-closed family on [m^2] whose 2^m "low" members are all subsets of
// [m] and whose remaining members are the prefixes [k] for m < k <= m^2.
// Size 2^m + m^2 - m; requires 1 <= m <= 20 and the size cap.
SetFamily make_Fm(int m);

enum class BinomialMode { AtMost, AtLeast, Exact };

// All subsets of [n] with size <= k, >= k, or == k.  Exact size precomputed
// and checked against the family size cap before generation.
SetFamily make_binomial(int n, BinomialMode mode, int k);

// The 1045-member family on [12]: subsets S with |S| >= 4 such that
// {1,2} is a subset of S, or 1 in S and S lies in the odd positions
// {1,3,...,11}, or 2 in S and S lies in the even positions {2,4,...,12}.
// Union-closed with exactly two abundant elements (1 and 2); every other
// element appears in exactly 522 of the 1045 members.
SetFamily make_S12_4();

// Membership test for the S^n_k clause structure on even n (1 and 2 are the
// designated elements, O = odds, E = evens): |S| >= k and ({1,2} subset S,
// or 1 in S subset O, or 2 in S subset E).
bool snk_contains(int n, int k, const Bitset& s);

// Materializes S^n_k.  Requires k >= 3, n even, n >= 10k, and the size cap;
// every parameter choice meeting those preconditions exceeds the default cap
// (the smallest, (30,3), already has about 2.7e8 members), so this errors
// unless UCLAB_SIZE_CAP is raised -- use snk_structural_report for analysis.
SetFamily make_Snk(int n, int k);

// Exact member counts of S^n_k by clause:
//   size        = T_a + 2 T_eo
//   T_a         = sum_{j >= k-2} C(n-2, j)        ({1,2} plus j others)
//   T_eo        = sum_{j >= k-1} C(n/2-1, j)      (2 plus j evens; odd side equal)
//   designated  = T_a + T_eo                      (count of element 1; also 2)
//   other       = sum_{j >= k-3} C(n-3, j) + sum_{j >= k-2} C(n/2-2, j)
struct SnkCounts {
  BigInt size;
  BigInt designated;  // frequency of elements 1 and 2
  BigInt other;       // frequency of every element >= 3
};

SnkCounts snk_counts(int n, int k);

// Analysis of S^n_k without materializing it.  union_closed is verified
// exactly over the three-clause feature algebra (membership of S u T depends
// only on which clauses S and T satisfy) and re-checked on sampled concrete
// member pairs; blocks_all_singletons is established by exhibiting, for each
// element pair, a member containing exactly one of the two.  Requires k >= 3,
// n even, n >= 2k + 2.
struct SnkReport {
  int n = 0;
  int k = 0;
  SnkCounts counts;
  std::vector<int> abundant;  // exact: 2 * frequency >= size
  bool union_closed = false;
  bool blocks_all_singletons = false;
};

SnkReport snk_structural_report(int n, int k, std::uint64_t closure_samples = 20000,
                                std::uint64_t seed = kDefaultSeed);

// The sufficient-and-necessary condition for every element >= 3 of S^n_k to
// be non-abundant: C(n-3, k-3) < 2 * sum_{j >= k-1} C(n/2-2, j), exact.
struct AbundanceInequality {
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

AbundanceInequality abundance_inequality(int n, int k);

// Approximate union-closedness experiment.  F1 is the exact-size slice of
// binom([n], ceil(psi_k n + n^(2/3))) -- sampled, never materialized; the
// union of k iid uniform draws from F1 is tested against the threshold
// family F2 = { |S| >= ceil((1 - psi_k) n) }.  log_gap is the exact
// log2 |F1| - log2 |F2| computed from big-integer binomials.
struct ApproxUcResult {
  int n = 0;
  int k_draws = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int slice_size = 0;       // member size of F1
  int union_threshold = 0;  // minimum union size counted as a hit
  double p_hat = 0.0;       // fraction of trials whose union met the threshold
  double log_gap = 0.0;
};

ApproxUcResult approx_uc_experiment(int n, int k_draws, int trials,
                                    std::uint64_t seed = kDefaultSeed);

}  // namespace uclab
