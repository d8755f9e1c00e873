#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uclab/bitset.hpp"
#include "uclab/rational.hpp"

namespace uclab {

struct GroundSet {
  int n = 0;
  explicit GroundSet(int n_) : n(n_) {
    if (n < 1 || n > kMaxGroundSet)
      throw DomainError("ground set size out of range: " + std::to_string(n));
  }
  bool operator==(const GroundSet&) const = default;
};

// A finite family of distinct subsets of [n], kept sorted in ascending
// bitset-integer order.  The empty family is rejected; {emptyset} is legal.
class SetFamily {
public:
  SetFamily(GroundSet ground, std::vector<Bitset> members);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.n; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Bitset>& members() const { return members_; }
  bool contains(const Bitset& s) const;
  bool operator==(const SetFamily&) const = default;

private:
  GroundSet ground_;
  std::vector<Bitset> members_;
};

enum class FamilyFormat { Auto, Braces, Bitstring };

// Text format: optional first line "n=<int>", then one member per line,
// either brace sets like "{1,3,4}" ("{}" for the empty set) or fixed-width
// 0/1 bitstrings (character k from the left = element k).  Blank lines and
// lines starting with '#' are ignored.  Without a header, brace input infers
// n as the largest element seen and bitstring input uses the line width.
SetFamily parse_family(std::string_view text, FamilyFormat format = FamilyFormat::Auto);
std::string serialize_family(const SetFamily& f, FamilyFormat format = FamilyFormat::Braces,
                             bool with_header = true);
SetFamily load_family(const std::string& path);
void save_family(const SetFamily& f, const std::string& path,
                 FamilyFormat format = FamilyFormat::Braces);

// F u F = { A u B : A, B in F }.  Contains F, since A u A = A.
SetFamily union_closure_step(const SetFamily& f);
bool is_union_closed(const SetFamily& f);

// Least union-closed superfamily of the generators.
SetFamily generate_closure(const SetFamily& generators);

struct FrequencyProfile {
  std::vector<std::int64_t> counts;  // counts[i] = members containing i; index 0 unused
  std::int64_t total = 0;
  Rational max_fraction;             // max_i counts[i] / total, exact
  int argmax = 0;                    // smallest element attaining the max
};

FrequencyProfile frequency_profile(const SetFamily& f);

// Elements appearing in at least half the members: 2*count >= |F|, exact.
std::vector<int> abundant_elements(const SetFamily& f);

struct BlockPartition {
  // Classes of elements with identical membership indicator vectors, each
  // sorted, ordered by smallest element.  Elements appearing in no member
  // form their own designated class, indexed by never_class (-1 if absent).
  std::vector<std::vector<int>> classes;
  int never_class = -1;

  bool all_singletons() const {
    for (const auto& c : classes)
      if (c.size() != 1) return false;
    return true;
  }
  bool has_singleton() const {
    for (const auto& c : classes)
      if (c.size() == 1) return true;
    return false;
  }
};

BlockPartition blocks(const SetFamily& f);

}  // namespace uclab
