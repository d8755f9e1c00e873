#pragma once

#include <cstdint>

namespace uclab {

// Ground sets are 1-indexed subsets of [n] with n up to this ceiling.
inline constexpr int kMaxGroundSet = 1024;

// Operations that walk all pairs of a family (closure step, union
// distribution) refuse to start above this many pairs.
inline constexpr std::uint64_t kPairGuard = 100'000'000;

// Cap on materialized family sizes.  Defaults to 10^7 members; the
// environment variable UCLAB_SIZE_CAP overrides it (read once per process).
std::uint64_t family_size_cap();

}  // namespace uclab
