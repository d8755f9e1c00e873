#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "uclab/family.hpp"

namespace uclab {

// Exhaustive scan over all 2^(2^n) candidate families on [n], n <= 4.
// Qualifying families are the union-closed ones other than the empty family
// and {emptyset}; families containing the empty set do qualify.
struct EnumerationReport {
  int n = 0;
  std::uint64_t families_scanned = 0;  // all candidate encodings, 2^(2^n)
  std::uint64_t uc_count = 0;          // qualifying union-closed families
  Rational min_max_fraction;           // min over qualifying F of max frequency
  std::optional<SetFamily> worst;      // a family attaining the minimum
  bool conjecture_holds = false;       // min_max_fraction >= 1/2
};

EnumerationReport enumerate_union_closed(
    int n, const std::function<void(const SetFamily&)>& visitor = nullptr);

// Independent second path: depth-first construction that only extends
// union-closed prefixes (members decided in descending bitset value, so any
// union of chosen members is already decided).  Used to cross-check the
// brute-force filter.
EnumerationReport enumerate_union_closed_pruned(int n);

// Runs the entropy certificate on every non-union-closed family on [n],
// n <= 3.  Returns {non_union_closed_total, proved_by_certificate}.
std::pair<std::uint64_t, std::uint64_t> certificate_coverage(int n);

}  // namespace uclab
