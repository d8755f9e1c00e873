#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "uclab/errors.hpp"
#include "uclab/limits.hpp"

namespace uclab {

// A subset of the 1-indexed ground set [width].  Element i is stored as bit
// (i-1), so the subset's integer value (element 1 = least significant bit)
// defines the canonical member order used throughout.
class Bitset {
public:
  Bitset() = default;

  explicit Bitset(int width) : width_(width) {
    if (width < 1 || width > kMaxGroundSet)
      throw DomainError("ground set size out of range: " + std::to_string(width));
    words_.assign(static_cast<std::size_t>((width + 63) / 64), 0);
  }

  static Bitset of(int width, std::initializer_list<int> elements) {
    Bitset b(width);
    for (int e : elements) b.add(e);
    return b;
  }

  static Bitset full(int width) {
    Bitset b(width);
    for (std::size_t w = 0; w < b.words_.size(); ++w) b.words_[w] = ~0ULL;
    b.trim();
    return b;
  }

  int width() const { return width_; }

  bool contains(int element) const {
    check_element(element);
    const int i = element - 1;
    return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1ULL;
  }

  void add(int element) {
    check_element(element);
    const int i = element - 1;
    words_[static_cast<std::size_t>(i >> 6)] |= 1ULL << (i & 63);
  }

  void remove(int element) {
    check_element(element);
    const int i = element - 1;
    words_[static_cast<std::size_t>(i >> 6)] &= ~(1ULL << (i & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_) if (w) return false;
    return true;
  }

  bool subset_of(const Bitset& other) const {
    check_same_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& other) {
    check_same_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset& other) const {
    return width_ == other.width_ && words_ == other.words_;
  }

  // Orders by integer value of the bit pattern.
  std::strong_ordering operator<=>(const Bitset& other) const {
    check_same_width(other);
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != other.words_[i])
        return words_[i] < other.words_[i] ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        out.push_back(static_cast<int>(wi * 64) + b + 1);
        w &= w - 1;
      }
    }
    return out;
  }

  // Character k from the left (1-indexed) reports element k.
  std::string bitstring() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int e = 1; e <= width_; ++e)
      if (contains(e)) s[static_cast<std::size_t>(e - 1)] = '1';
    return s;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL ^ static_cast<std::size_t>(width_);
    for (std::uint64_t w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

private:
  void check_element(int element) const {
    if (element < 1 || element > width_)
      throw DomainError("element " + std::to_string(element) +
                        " out of range for ground set [" + std::to_string(width_) + "]");
  }

  void check_same_width(const Bitset& other) const {
    if (width_ != other.width_) throw DomainError("ground set mismatch");
  }

  void trim() {
    const int tail = width_ & 63;
    if (tail && !words_.empty()) words_.back() &= (1ULL << tail) - 1ULL;
  }

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace uclab
