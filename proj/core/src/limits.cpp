#include "uclab/limits.hpp"

#include <cstdlib>
#include <string>

namespace uclab {

std::uint64_t family_size_cap() {
  static const std::uint64_t cap = [] {
    const char* env = std::getenv("UCLAB_SIZE_CAP");
    if (env && *env) {
      try {
        const long long v = std::stoll(env);
        if (v > 0) return static_cast<std::uint64_t>(v);
      } catch (...) {
      }
    }
    return static_cast<std::uint64_t>(10'000'000);
  }();
  return cap;
}

}  // namespace uclab
