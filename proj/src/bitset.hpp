#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "gsb/core.hpp"

namespace gsb::detail {

/// Fixed-width bitset sized at runtime; just enough for union counting.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  static Bitset of(const CoordSet& s, std::size_t bits) {
    Bitset b(bits);
    for (std::size_t i : s) b.set(i);
    return b;
  }

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace gsb::detail
