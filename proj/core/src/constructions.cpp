#include "uclab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "uclab/limits.hpp"
#include "uclab/verifier.hpp"

namespace uclab {

namespace {

Bitset from_mask(int n, std::uint64_t mask) {
  Bitset b(n);
  const int top = n < 64 ? n : 64;  // mask carries at most 64 element slots
  for (int e = 1; e <= top; ++e)
    if (mask >> (e - 1) & 1) b.add(e);
  return b;
}

Bitset odd_positions(int n) {
  Bitset b(n);
  for (int e = 1; e <= n; e += 2) b.add(e);
  return b;
}

Bitset even_positions(int n) {
  Bitset b(n);
  for (int e = 2; e <= n; e += 2) b.add(e);
  return b;
}

void require_cap(const BigInt& size, const char* what) {
  if (size > BigInt(family_size_cap()))
    throw ResourceError(std::string(what) + " has " + size.str() +
                        " members, over the family size cap of " +
                        std::to_string(family_size_cap()) +
                        " (UCLAB_SIZE_CAP raises it)");
}

// Appends base + every size-j subset of pool, in lexicographic pool order.
void emit_with_pool(const Bitset& base, const std::vector<int>& pool, int j,
                    std::vector<Bitset>& out) {
  const int p = static_cast<int>(pool.size());
  if (j < 0 || j > p) return;
  if (j == 0) {
    out.push_back(base);
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(j));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Bitset b = base;
    for (int t : idx) b.add(pool[static_cast<std::size_t>(t)]);
    out.push_back(std::move(b));
    int i = j - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - (j - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < j; ++t)
      idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

std::vector<int> range_pool(int from, int to, int skip1 = 0, int skip2 = 0) {
  std::vector<int> pool;
  for (int e = from; e <= to; ++e)
    if (e != skip1 && e != skip2) pool.push_back(e);
  return pool;
}

std::vector<int> parity_pool(int n, int parity_start, int skip1 = 0, int skip2 = 0) {
  std::vector<int> pool;
  for (int e = parity_start; e <= n; e += 2)
    if (e != skip1 && e != skip2) pool.push_back(e);
  return pool;
}

}  // namespace

SetFamily make_Fm(int m) {
  if (m < 1 || m > 20) throw DomainError("m must lie in [1, 20]");
  const int n = m * m;
  const BigInt size = (BigInt(1) << m) + (n - m);
  require_cap(size, "the staircase family");

  std::vector<Bitset> members;
  members.reserve(static_cast<std::size_t>((std::uint64_t{1} << m) + n - m));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
    members.push_back(from_mask(n, mask));
  Bitset prefix = from_mask(n, (std::uint64_t{1} << m) - 1);
  for (int e = m + 1; e <= n; ++e) {
    prefix.add(e);
    members.push_back(prefix);
  }
  return SetFamily(GroundSet(n), std::move(members));
}

SetFamily make_binomial(int n, BinomialMode mode, int k) {
  if (n < 1 || n > kMaxGroundSet) throw DomainError("ground set size out of range");
  if (k < 0 || k > n) throw DomainError("size threshold out of range");
  int lo = 0, hi = n;
  switch (mode) {
    case BinomialMode::AtMost: hi = k; break;
    case BinomialMode::AtLeast: lo = k; break;
    case BinomialMode::Exact: lo = hi = k; break;
  }
  BigInt size = 0;
  for (int j = lo; j <= hi; ++j) size += binomial(n, j);
  require_cap(size, "the binomial family");

  std::vector<Bitset> members;
  members.reserve(size.convert_to<std::size_t>());
  const std::vector<int> pool = range_pool(1, n);
  for (int j = lo; j <= hi; ++j) emit_with_pool(Bitset(n), pool, j, members);
  return SetFamily(GroundSet(n), std::move(members));
}

bool snk_contains(int n, int k, const Bitset& s) {
  if (n < 2 || n % 2 != 0) throw DomainError("ground set size must be even");
  if (k < 1) throw DomainError("size threshold must be positive");
  if (s.width() != n) throw DomainError("set width does not match ground set");
  if (s.count() < static_cast<std::size_t>(k)) return false;
  const bool has1 = s.contains(1), has2 = s.contains(2);
  if (has1 && has2) return true;
  if (has1 && s.subset_of(odd_positions(n))) return true;
  return has2 && s.subset_of(even_positions(n));
}

SetFamily make_S12_4() {
  std::vector<Bitset> members;
  members.reserve(1045);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 12); ++mask) {
    Bitset b = from_mask(12, mask);
    if (snk_contains(12, 4, b)) members.push_back(std::move(b));
  }
  return SetFamily(GroundSet(12), std::move(members));
}

SnkCounts snk_counts(int n, int k) {
  if (k < 3) throw DomainError("the clause structure needs k >= 3");
  if (n < 4 || n % 2 != 0) throw DomainError("ground set size must be even, >= 4");
  SnkCounts c;
  const BigInt t_a = binomial_tail(n - 2, k - 2);
  const BigInt t_eo = binomial_tail(n / 2 - 1, k - 1);
  c.size = t_a + 2 * t_eo;
  c.designated = t_a + t_eo;
  c.other = binomial_tail(n - 3, k - 3) + binomial_tail(n / 2 - 2, k - 2);
  return c;
}

SetFamily make_Snk(int n, int k) {
  if (k < 3) throw DomainError("k must be at least 3");
  if (n % 2 != 0) throw DomainError("n must be even");
  if (n < 10 * k) throw DomainError("n must be at least 10k");
  const SnkCounts counts = snk_counts(n, k);
  require_cap(counts.size, "the two-clause family");

  std::vector<Bitset> members;
  members.reserve(counts.size.convert_to<std::size_t>());
  Bitset base_a(n);
  base_a.add(1);
  base_a.add(2);
  const std::vector<int> pool_a = range_pool(3, n);
  for (int j = std::max(0, k - 2); j <= n - 2; ++j)
    emit_with_pool(base_a, pool_a, j, members);
  Bitset base_o(n);
  base_o.add(1);
  const std::vector<int> pool_o = parity_pool(n, 1, 1);
  for (int j = k - 1; j <= n / 2 - 1; ++j) emit_with_pool(base_o, pool_o, j, members);
  Bitset base_e(n);
  base_e.add(2);
  const std::vector<int> pool_e = parity_pool(n, 2, 2);
  for (int j = k - 1; j <= n / 2 - 1; ++j) emit_with_pool(base_e, pool_e, j, members);
  return SetFamily(GroundSet(n), std::move(members));
}

namespace {

// Feature vector of a member under the clause structure: everything the
// membership predicate can see apart from the size.
struct ClauseFeatures {
  bool has1 = false, has2 = false, sub_odd = false, sub_even = false;
};

// The three realizable feature vectors: {1,2}-members, odd-only members,
// even-only members.
constexpr ClauseFeatures kRealizable[3] = {
    {true, true, false, false},
    {true, false, true, false},
    {false, true, false, true},
};

// Features compose exactly under union: element membership is disjunctive,
// subset-of-a-fixed-set is conjunctive.
ClauseFeatures compose(const ClauseFeatures& a, const ClauseFeatures& b) {
  return {a.has1 || b.has1, a.has2 || b.has2, a.sub_odd && b.sub_odd,
          a.sub_even && b.sub_even};
}

bool clause_predicate(const ClauseFeatures& f) {
  return (f.has1 && f.has2) || (f.has1 && f.sub_odd) || (f.has2 && f.sub_even);
}

// Exact union-closedness over the feature algebra: |S u T| >= max(|S|, |T|)
// >= k holds for any pair of members, so only the clause part needs checking,
// and it depends only on the feature vectors.
bool feature_algebra_union_closed() {
  for (const ClauseFeatures& a : kRealizable)
    for (const ClauseFeatures& b : kRealizable)
      if (!clause_predicate(compose(a, b))) return false;
  return true;
}

// Weighted class table for exact uniform sampling of members: one row per
// (clause, extra-size) pair, weighted by the exact count of such members.
struct SampleClass {
  int clause = 0;  // 0: {1,2}+rest, 1: odd side, 2: even side
  int extra = 0;   // members drawn from the clause's pool
  BigInt cum;      // cumulative weight including this row
};

std::vector<SampleClass> sample_classes(int n, int k, BigInt& total) {
  std::vector<SampleClass> rows;
  total = 0;
  for (int j = std::max(0, k - 2); j <= n - 2; ++j) {
    total += binomial(n - 2, j);
    rows.push_back({0, j, total});
  }
  for (int clause = 1; clause <= 2; ++clause)
    for (int j = k - 1; j <= n / 2 - 1; ++j) {
      total += binomial(n / 2 - 1, j);
      rows.push_back({clause, j, total});
    }
  return rows;
}

Bitset sample_member(int n, const std::vector<SampleClass>& rows,
                     const BigInt& total, SplitMix64& rng) {
  const BigInt r = uniform_big_below(rng, total);
  const SampleClass* row = nullptr;
  for (const SampleClass& c : rows)
    if (r < c.cum) {
      row = &c;
      break;
    }
  Bitset b(n);
  std::vector<int> pool;
  if (row->clause == 0) {
    b.add(1);
    b.add(2);
    pool = range_pool(3, n);
  } else if (row->clause == 1) {
    b.add(1);
    pool = parity_pool(n, 1, 1);
  } else {
    b.add(2);
    pool = parity_pool(n, 2, 2);
  }
  // Partial Fisher-Yates: the first `extra` entries are a uniform subset.
  for (int i = 0; i < row->extra; ++i) {
    const std::size_t pick =
        static_cast<std::size_t>(i) +
        static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(pool.size() - static_cast<std::size_t>(i))));
    std::swap(pool[static_cast<std::size_t>(i)], pool[pick]);
    b.add(pool[static_cast<std::size_t>(i)]);
  }
  return b;
}

// A member containing `with` and avoiding `without`, when the clause
// structure admits one.
std::optional<Bitset> separating_member(int n, int k, int with, int without) {
  struct Attempt {
    Bitset base;
    std::vector<int> pool;
  };
  std::vector<Attempt> attempts;
  if (without != 1 && without != 2) {
    Bitset b(n);
    b.add(1);
    b.add(2);
    if (with != 1 && with != 2) b.add(with);
    attempts.push_back({std::move(b), range_pool(3, n, with, without)});
  }
  if (with % 2 == 1 && without != 1) {
    Bitset b(n);
    b.add(1);
    b.add(with);
    attempts.push_back({std::move(b), parity_pool(n, 1, 1, with)});
  }
  if (with % 2 == 0 && without != 2) {
    Bitset b(n);
    b.add(2);
    b.add(with);
    attempts.push_back({std::move(b), parity_pool(n, 2, 2, with)});
  }
  for (Attempt& a : attempts) {
    Bitset b = a.base;
    for (int e : a.pool) {
      if (b.count() >= static_cast<std::size_t>(k)) break;
      if (e != without) b.add(e);
    }
    if (b.count() >= static_cast<std::size_t>(k) && b.contains(with) &&
        !b.contains(without) && snk_contains(n, k, b))
      return b;
  }
  return std::nullopt;
}

}  // namespace

SnkReport snk_structural_report(int n, int k, std::uint64_t closure_samples,
                                std::uint64_t seed) {
  if (k < 3) throw DomainError("k must be at least 3");
  if (n % 2 != 0) throw DomainError("n must be even");
  if (n < 2 * k + 2) throw DomainError("n must be at least 2k + 2");

  SnkReport rep;
  rep.n = n;
  rep.k = k;
  rep.counts = snk_counts(n, k);

  // The designated elements are always abundant: 2 (T_a + T_eo) >= T_a + 2 T_eo.
  rep.abundant = {1, 2};
  if (2 * rep.counts.other >= rep.counts.size)
    for (int e = 3; e <= n; ++e) rep.abundant.push_back(e);

  rep.union_closed = feature_algebra_union_closed();
  if (rep.union_closed && closure_samples > 0) {
    BigInt total;
    const std::vector<SampleClass> rows = sample_classes(n, k, total);
    SplitMix64 rng(seed);
    for (std::uint64_t t = 0; t < closure_samples; ++t) {
      const Bitset a = sample_member(n, rows, total, rng);
      const Bitset b = sample_member(n, rows, total, rng);
      if (!snk_contains(n, k, a) || !snk_contains(n, k, b) ||
          !snk_contains(n, k, a | b)) {
        rep.union_closed = false;
        break;
      }
    }
  }

  rep.blocks_all_singletons = true;
  for (int i = 1; i <= n && rep.blocks_all_singletons; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!separating_member(n, k, i, j) && !separating_member(n, k, j, i)) {
        rep.blocks_all_singletons = false;
        break;
      }
    }
  return rep;
}

AbundanceInequality abundance_inequality(int n, int k) {
  if (k < 3) throw DomainError("the inequality needs k >= 3");
  if (n < 4 || n % 2 != 0) throw DomainError("n must be even, >= 4");
  // Via Pascal's identity, 2 * other < size reduces exactly to
  //   C(n-3, k-3) < 2 * sum_{j >= k-1} C(n/2 - 2, j),
  // so `holds` is equivalent to every element >= 3 being non-abundant.
  AbundanceInequality out;
  out.lhs = binomial(n - 3, k - 3);
  out.rhs = 2 * binomial_tail(n / 2 - 2, k - 1);
  out.holds = out.lhs < out.rhs;
  return out;
}

ApproxUcResult approx_uc_experiment(int n, int k_draws, int trials,
                                    std::uint64_t seed) {
  if (n < 8 || n > kMaxGroundSet) throw DomainError("n must lie in [8, 1024]");
  if (k_draws < 2) throw DomainError("need at least 2 draws per trial");
  if (trials < 1) throw DomainError("need at least 1 trial");

  ApproxUcResult res;
  res.n = n;
  res.k_draws = k_draws;
  res.trials = trials;
  res.seed = seed;

  const double root = psi_k(k_draws, 1e-13);
  const double c = std::cbrt(static_cast<double>(n));
  res.slice_size = static_cast<int>(std::ceil(root * n + c * c));
  res.union_threshold = static_cast<int>(std::ceil((1.0 - root) * n));
  if (res.slice_size < 1 || res.slice_size > n || res.union_threshold > n)
    throw DomainError("parameters leave no valid slice");

  res.log_gap = log2_big(binomial(n, res.slice_size)) -
                log2_big(binomial_tail(n, res.union_threshold));

  std::vector<int> pool(static_cast<std::size_t>(n));
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng = trial_stream(seed, static_cast<std::uint64_t>(t));
    Bitset un(n);
    for (int d = 0; d < k_draws; ++d) {
      std::iota(pool.begin(), pool.end(), 1);
      for (int i = 0; i < res.slice_size; ++i) {
        const std::size_t pick =
            static_cast<std::size_t>(i) +
            static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[pick]);
        un.add(pool[static_cast<std::size_t>(i)]);
      }
    }
    if (un.count() >= static_cast<std::size_t>(res.union_threshold)) ++hits;
  }
  res.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
  return res;
}

}  // namespace uclab
