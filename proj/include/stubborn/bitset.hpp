#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stubborn/common.hpp"

namespace stubborn {

// Flat bit array with word-level access. Backs sieve output and the block
// flag / survivor arrays of the unit search.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : words_((size + 63) / 64, 0), size_(size) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
    return total;
  }

  // Visit indexes of set bits in ascending order.
  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(w));
        f(wi * 64 + bit);
        w &= w - 1;
      }
    }
  }

  bool operator==(const Bitset& other) const {
    return size_ == other.size_ && words_ == other.words_;
  }

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  // Bits at positions >= size() must stay zero; callers touching words()
  // directly use this to re-establish the invariant.
  void clear_tail() {
    if (size_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

// Primality indicator over the half-open interval [lo, hi):
// bit i set iff lo + i is prime, exact in both directions.
struct PrimeBitmap {
  Value lo = 0;
  Value hi = 0;
  Bitset bits;

  std::size_t count() const { return bits.count(); }
};

}  // namespace stubborn
