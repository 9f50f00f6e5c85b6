#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace ngtw {

// Minimal dynamic bitset. Width is fixed at construction; all binary
// operations require operands of the same width.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits)
      : nbits_(nbits), w_(static_cast<size_t>((nbits + 63) / 64), 0) {}

  int size() const { return nbits_; }

  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < nbits_);
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < nbits_);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  int count_and(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  bool is_subset_of(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  int first() const { return next(-1); }
  // First set bit strictly greater than i, or -1.
  int next(int i) const {
    int start = i + 1;
    if (start >= nbits_) return -1;
    int wi = start >> 6;
    uint64_t x = w_[wi] & (~uint64_t{0} << (start & 63));
    while (true) {
      if (x) return wi * 64 + std::countr_zero(x);
      if (++wi >= static_cast<int>(w_.size())) return -1;
      x = w_[wi];
    }
  }

  template <class F>
  void for_each(F f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t x = w_[wi];
      while (x) {
        f(static_cast<int>(wi * 64) + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }

  bool operator==(const Bitset&) const = default;

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace ngtw
