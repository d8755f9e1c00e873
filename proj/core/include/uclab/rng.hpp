#pragma once

#include <cstdint>

#include "uclab/rational.hpp"

namespace uclab {

// Fixed documented default seed for every randomized run.
inline constexpr std::uint64_t kDefaultSeed = 42;

// SplitMix64 (Steele, Lea, Flood 2014): state advances by the golden-gamma
// constant and the output is a 64-bit finalizer of the state.  Chosen for
// trivial cross-language reproducibility.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, m) by modulo reduction (bias < 2^-50 for m < 2^14,
  // irrelevant at the sizes used here and fully deterministic).
  std::uint64_t below(std::uint64_t m) { return next() % m; }
};

// Independent per-trial stream: documented derivation from (seed, index).
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ ((index + 1) * 0x9E3779B97F4A7C15ULL));
}

// Uniform big integer in [0, limit) by rejection on msb(limit)+1 bit draws.
BigInt uniform_big_below(SplitMix64& rng, const BigInt& limit);

}  // namespace uclab
