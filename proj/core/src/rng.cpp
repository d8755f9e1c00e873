#include "uclab/rng.hpp"

#include "uclab/errors.hpp"

namespace uclab {

BigInt uniform_big_below(SplitMix64& rng, const BigInt& limit) {
  if (limit <= 0) throw DomainError("sampling limit must be positive");
  const unsigned bits = boost::multiprecision::msb(limit) + 1;
  const unsigned words = (bits + 63) / 64;
  // Rejection sampling on `bits`-bit draws: acceptance probability > 1/2.
  while (true) {
    BigInt r = 0;
    for (unsigned w = 0; w < words; ++w) {
      std::uint64_t chunk = rng.next();
      if (w + 1 == words && bits % 64 != 0)
        chunk &= (std::uint64_t{1} << (bits % 64)) - 1;
      r |= BigInt(chunk) << (64 * w);
    }
    if (r < limit) return r;
  }
}

}  // namespace uclab
