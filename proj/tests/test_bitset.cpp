#include "doctest.h"

#include <algorithm>
#include <vector>

#include "uclab/bitset.hpp"
#include "uclab/rng.hpp"

using namespace uclab;

TEST_CASE("bitset basic membership and mutation") {
  Bitset b(10);
  CHECK(b.empty());
  CHECK(b.count() == 0);
  b.add(3);
  b.add(7);
  CHECK(b.contains(3));
  CHECK(b.contains(7));
  CHECK_FALSE(b.contains(4));
  CHECK(b.count() == 2);
  b.remove(3);
  CHECK_FALSE(b.contains(3));
  CHECK(b.count() == 1);
  CHECK_FALSE(b.empty());
}

TEST_CASE("bitset element bounds are enforced") {
  Bitset b(5);
  CHECK_THROWS_AS(b.add(0), DomainError);
  CHECK_THROWS_AS(b.add(6), DomainError);
  CHECK_THROWS_AS(b.contains(-1), DomainError);
  CHECK_THROWS_AS(Bitset(0), DomainError);
  CHECK_THROWS_AS(Bitset(kMaxGroundSet + 1), DomainError);
}

TEST_CASE("bitset spans multiple words") {
  Bitset b(200);
  for (int e : {1, 63, 64, 65, 128, 200}) b.add(e);
  CHECK(b.count() == 6);
  CHECK(b.elements() == std::vector<int>{1, 63, 64, 65, 128, 200});
  Bitset full = Bitset::full(200);
  CHECK(full.count() == 200);
  CHECK(b.subset_of(full));
  CHECK_FALSE(full.subset_of(b));
}

TEST_CASE("bitset union and subset relations") {
  Bitset a = Bitset::of(6, {1, 2});
  Bitset b = Bitset::of(6, {2, 5});
  Bitset u = a | b;
  CHECK(u.elements() == std::vector<int>{1, 2, 5});
  CHECK(a.subset_of(u));
  CHECK(b.subset_of(u));
  CHECK((a | a) == a);
  CHECK_THROWS_AS(a | Bitset::of(7, {1}), DomainError);  // width mismatch
}

TEST_CASE("bitset order follows the integer value of the bit pattern") {
  // Element 1 is the least significant bit, so {2} > {1} and {1,2} > {2}.
  Bitset e1 = Bitset::of(4, {1});
  Bitset e2 = Bitset::of(4, {2});
  Bitset e12 = Bitset::of(4, {1, 2});
  CHECK(e1 < e2);
  CHECK(e2 < e12);
  CHECK(Bitset(4) < e1);
  // Across word boundaries the high word dominates.
  Bitset lo = Bitset::of(100, {1, 2, 3, 4, 5});
  Bitset hi = Bitset::of(100, {70});
  CHECK(lo < hi);
}

TEST_CASE("bitstring rendering places element k at character k") {
  Bitset b = Bitset::of(5, {1, 4});
  CHECK(b.bitstring() == "10010");
  CHECK(Bitset(3).bitstring() == "000");
}

TEST_CASE("random unions stay consistent with per-element checks") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.next() % 150);
    Bitset a(n), b(n);
    for (int e = 1; e <= n; ++e) {
      if (rng.next() & 1) a.add(e);
      if (rng.next() & 1) b.add(e);
    }
    const Bitset u = a | b;
    for (int e = 1; e <= n; ++e)
      CHECK(u.contains(e) == (a.contains(e) || b.contains(e)));
    CHECK(u.count() >= std::max(a.count(), b.count()));
  }
}
