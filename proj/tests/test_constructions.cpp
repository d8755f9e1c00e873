// Extremal family constructions: staircase families, binomial slices, the
// 1045-member witness on [12], its scaled clause variants, and the
// approximate-union-closedness experiment.
#include "doctest.h"

#include <cmath>

#include "uclab/constructions.hpp"
#include "uclab/entropy.hpp"
#include "uclab/family.hpp"

using namespace uclab;

TEST_CASE("staircase family: powerset low part plus prefix chain") {
  SUBCASE("m = 1") {
    const SetFamily f = make_Fm(1);
    CHECK(f.n() == 1);
    CHECK(f.size() == 2);
    CHECK(is_union_closed(f));
    CHECK(f.contains(Bitset(1)));
    CHECK(f.contains(Bitset::of(1, {1})));
  }
  SUBCASE("m = 3") {
    const SetFamily f = make_Fm(3);
    CHECK(f.n() == 9);
    CHECK(f.size() == 14);  // 2^3 + 9 - 3
    CHECK(is_union_closed(f));
    CHECK(f.contains(Bitset::full(9)));

    const FrequencyProfile p = frequency_profile(f);
    CHECK(p.max_fraction == Rational(10, 14));
    CHECK(p.argmax == 1);
    CHECK(p.counts[1] == 10);  // 4 low members + 6 prefixes
    CHECK(p.counts[3] == 10);
    CHECK(p.counts[4] == 6);   // prefixes [4]..[9]
    CHECK(p.counts[5] == 5);
    CHECK(p.counts[9] == 1);
    CHECK(abundant_elements(f) == std::vector<int>{1, 2, 3});

    const BlockPartition b = blocks(f);
    CHECK(b.all_singletons());
    CHECK(b.never_class == -1);
  }
  SUBCASE("m = 10 drives the entropy ratio close to its floor") {
    const SetFamily f = make_Fm(10);
    CHECK(f.n() == 100);
    CHECK(f.size() == 1114);  // 2^10 + 100 - 10
    CHECK(is_union_closed(f));
    const GilmerRatio r = gilmer_ratio(uniform_distribution(f));
    CHECK(r.max_marginal == Rational(301, 557));  // 602/1114 for element 1
    CHECK(std::fabs(r.ratio - 0.83818599071828690827) <= 1e-12);
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(make_Fm(0), DomainError);
    CHECK_THROWS_AS(make_Fm(21), DomainError);
  }
}

TEST_CASE("binomial slice families") {
  const SetFamily at_most = make_binomial(5, BinomialMode::AtMost, 3);
  CHECK(at_most.size() == 26);
  CHECK_FALSE(is_union_closed(at_most));

  const SetFamily exact = make_binomial(5, BinomialMode::Exact, 3);
  CHECK(exact.size() == 10);
  for (const Bitset& m : exact.members()) CHECK(m.count() == 3);

  const SetFamily at_least = make_binomial(5, BinomialMode::AtLeast, 3);
  CHECK(at_least.size() == 16);
  CHECK(is_union_closed(at_least));  // unions never shrink

  const SetFamily powerset = make_binomial(5, BinomialMode::AtMost, 5);
  CHECK(powerset.size() == 32);
  CHECK(is_union_closed(powerset));

  const SetFamily empty_only = make_binomial(4, BinomialMode::Exact, 0);
  CHECK(empty_only.size() == 1);
  CHECK(is_union_closed(empty_only));

  CHECK(make_binomial(3, BinomialMode::AtMost, 2).size() == 7);

  SUBCASE("guards") {
    CHECK_THROWS_AS(make_binomial(0, BinomialMode::AtMost, 0), DomainError);
    CHECK_THROWS_AS(make_binomial(5, BinomialMode::AtMost, -1), DomainError);
    CHECK_THROWS_AS(make_binomial(5, BinomialMode::AtMost, 6), DomainError);
    CHECK_THROWS_AS(make_binomial(60, BinomialMode::AtMost, 60), ResourceError);
  }
}

TEST_CASE("the 1045-member family on [12]") {
  const SetFamily f = make_S12_4();
  REQUIRE(f.size() == 1045);
  CHECK(f.n() == 12);
  CHECK(is_union_closed(f));
  for (const Bitset& m : f.members()) CHECK(m.count() >= 4);

  const FrequencyProfile p = frequency_profile(f);
  CHECK(p.counts[1] == 1029);
  CHECK(p.counts[2] == 1029);
  for (int e = 3; e <= 12; ++e) CHECK(p.counts[static_cast<std::size_t>(e)] == 522);
  CHECK(p.max_fraction == Rational(1029, 1045));
  CHECK(p.argmax == 1);

  // Exactly the two designated elements are abundant: 2*522 = 1044 < 1045.
  CHECK(abundant_elements(f) == std::vector<int>{1, 2});

  const BlockPartition b = blocks(f);
  CHECK(b.all_singletons());
  CHECK(b.never_class == -1);

  // The closed-form counts agree with the materialized family.
  const SnkCounts c = snk_counts(12, 4);
  CHECK(c.size == 1045);
  CHECK(c.designated == 1029);
  CHECK(c.other == 522);
}

TEST_CASE("clause membership predicate") {
  CHECK(snk_contains(12, 4, Bitset::of(12, {1, 2, 3, 4})));
  CHECK(snk_contains(12, 4, Bitset::of(12, {1, 3, 5, 7})));    // odd side
  CHECK(snk_contains(12, 4, Bitset::of(12, {2, 4, 6, 8})));    // even side
  CHECK_FALSE(snk_contains(12, 4, Bitset::of(12, {1, 2, 3})));  // too small
  CHECK_FALSE(snk_contains(12, 4, Bitset::of(12, {3, 4, 5, 6})));  // no designated
  CHECK_FALSE(snk_contains(12, 4, Bitset::of(12, {1, 3, 5, 8})));  // off the odd side
  CHECK_FALSE(snk_contains(12, 4, Bitset::of(12, {2, 3, 4, 6})));  // off the even side

  CHECK_THROWS_AS(snk_contains(11, 4, Bitset::of(11, {1, 2, 3, 4})), DomainError);
  CHECK_THROWS_AS(snk_contains(12, 0, Bitset(12)), DomainError);
  CHECK_THROWS_AS(snk_contains(12, 4, Bitset(10)), DomainError);
}

TEST_CASE("closed-form member counts for the scaled clause families") {
  SnkCounts c = snk_counts(30, 3);
  CHECK(c.size == 268468193);
  CHECK(c.designated == 268451824);
  CHECK(c.other == 134225919);

  c = snk_counts(40, 4);
  CHECK(c.size == BigInt(274878955099LL));
  CHECK(c.designated == BigInt(274878431002LL));
  CHECK(c.other == BigInt(137439215596LL));

  c = snk_counts(50, 5);
  CHECK(c.size == BigInt(281475010259261LL));
  CHECK(c.designated == BigInt(281474993484370LL));
  CHECK(c.other == BigInt(140737496743611LL));

  CHECK_THROWS_AS(snk_counts(30, 2), DomainError);
  CHECK_THROWS_AS(snk_counts(29, 3), DomainError);
}

TEST_CASE("materializing a scaled clause family is guarded") {
  CHECK_THROWS_AS(make_Snk(13, 3), DomainError);   // odd n
  CHECK_THROWS_AS(make_Snk(20, 3), DomainError);   // n < 10k
  CHECK_THROWS_AS(make_Snk(30, 2), DomainError);   // k < 3
  // Every admissible parameter choice exceeds the default size cap.
  CHECK_THROWS_AS(make_Snk(30, 3), ResourceError);
}

TEST_CASE("structural report matches the materialized family on [12]") {
  const SnkReport rep = snk_structural_report(12, 4, 5000);
  CHECK(rep.n == 12);
  CHECK(rep.k == 4);
  CHECK(rep.counts.size == 1045);
  CHECK(rep.counts.designated == 1029);
  CHECK(rep.counts.other == 522);
  CHECK(rep.abundant == std::vector<int>{1, 2});
  CHECK(rep.union_closed);
  CHECK(rep.blocks_all_singletons);

  const SetFamily f = make_S12_4();
  CHECK(rep.union_closed == is_union_closed(f));
  CHECK(rep.abundant == abundant_elements(f));
  CHECK(rep.blocks_all_singletons == blocks(f).all_singletons());
}

TEST_CASE("structural reports for families too large to materialize") {
  const SnkReport a = snk_structural_report(30, 3, 5000);
  CHECK(a.counts.size == 268468193);
  CHECK(a.abundant == std::vector<int>{1, 2});
  CHECK(a.union_closed);
  CHECK(a.blocks_all_singletons);

  const SnkReport b = snk_structural_report(40, 4, 5000);
  CHECK(b.counts.size == BigInt(274878955099LL));
  CHECK(b.abundant == std::vector<int>{1, 2});
  CHECK(b.union_closed);
  CHECK(b.blocks_all_singletons);

  const SnkReport c = snk_structural_report(50, 5, 5000);
  CHECK(c.counts.size == BigInt(281475010259261LL));
  CHECK(c.abundant == std::vector<int>{1, 2});
  CHECK(c.union_closed);
  CHECK(c.blocks_all_singletons);

  CHECK_THROWS_AS(snk_structural_report(6, 3), DomainError);   // n < 2k + 2
  CHECK_THROWS_AS(snk_structural_report(13, 4), DomainError);  // odd n
  CHECK_THROWS_AS(snk_structural_report(12, 2), DomainError);  // k < 3
}

TEST_CASE("non-abundance inequality for the non-designated elements") {
  AbundanceInequality q = abundance_inequality(30, 3);
  CHECK(q.lhs == 1);
  CHECK(q.rhs == 16356);
  CHECK(q.holds);

  q = abundance_inequality(12, 4);
  CHECK(q.lhs == 9);
  CHECK(q.rhs == 10);
  CHECK(q.holds);

  q = abundance_inequality(40, 4);
  CHECK(q.lhs == 37);
  CHECK(q.rhs == 523944);
  CHECK(q.holds);

  q = abundance_inequality(50, 5);
  CHECK(q.lhs == 1081);
  CHECK(q.rhs == 16773120);
  CHECK(q.holds);

  // Small parameters where the inequality genuinely fails.
  q = abundance_inequality(6, 3);
  CHECK(q.lhs == 1);
  CHECK(q.rhs == 0);
  CHECK_FALSE(q.holds);

  CHECK_THROWS_AS(abundance_inequality(30, 2), DomainError);
  CHECK_THROWS_AS(abundance_inequality(7, 3), DomainError);
}

TEST_CASE("approximate union-closedness experiment") {
  const ApproxUcResult r = approx_uc_experiment(1000, 2, 200, 42);
  CHECK(r.n == 1000);
  CHECK(r.k_draws == 2);
  CHECK(r.trials == 200);
  CHECK(r.seed == 42);
  CHECK(r.slice_size == 482);       // ceil(psi_2 * 1000 + 1000^(2/3))
  CHECK(r.union_threshold == 619);  // ceil((1 - psi_2) * 1000)
  CHECK(r.p_hat == 1.0);
  CHECK(std::fabs(r.log_gap - 38.918203751032577065) <= 1e-9);

  SUBCASE("same seed reproduces the exact result") {
    const ApproxUcResult s = approx_uc_experiment(1000, 2, 200, 42);
    CHECK(s.p_hat == r.p_hat);
    CHECK(s.log_gap == r.log_gap);
  }
  SUBCASE("per-trial streams make prefixes consistent") {
    // The first 50 trials of a 200-trial run are the 50-trial run.
    const ApproxUcResult s = approx_uc_experiment(1000, 2, 50, 42);
    CHECK(s.p_hat == 1.0);
    CHECK(s.log_gap == r.log_gap);
  }
  SUBCASE("more draws shrink the slice and raise the threshold") {
    const ApproxUcResult s = approx_uc_experiment(1000, 3, 10, 42);
    CHECK(s.slice_size == 418);       // ceil(psi_3 * 1000 + 1000^(2/3))
    CHECK(s.union_threshold == 683);  // ceil((1 - psi_3) * 1000)
    CHECK(s.p_hat >= 0.0);
    CHECK(s.p_hat <= 1.0);
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(approx_uc_experiment(7, 2, 10, 42), DomainError);
    CHECK_THROWS_AS(approx_uc_experiment(2000, 2, 10, 42), DomainError);
    CHECK_THROWS_AS(approx_uc_experiment(100, 1, 10, 42), DomainError);
    CHECK_THROWS_AS(approx_uc_experiment(100, 2, 0, 42), DomainError);
  }
}
