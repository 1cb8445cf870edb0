#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace longhole {

// Fixed-capacity dynamic bitset over 64-bit words. Capacity is set at
// construction; all binary operations assume equal capacity.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  int capacity() const { return capacity_; }

  void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator-=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset& o) const { return words_ == o.words_; }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  // Index of the lowest set bit, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
    }
    return -1;
  }

  // Lowest set bit strictly greater than i, or -1.
  int next(int i) const {
    ++i;
    if (i >= capacity_) return -1;
    size_t wi = size_t(i) >> 6;
    uint64_t w = words_[wi] >> (i & 63);
    if (w) return i + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi) {
      if (words_[wi]) return int(wi * 64) + std::countr_zero(words_[wi]);
    }
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

 private:
  int capacity_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace longhole
