#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace graphprof {

// Fixed-size bitset over machine words. Adjacency rows are stored in these;
// popcounted word intersections are the inner loop of every counting kernel,
// so the combining operations are provided directly instead of going through
// temporary bitsets.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t nbits)
      : words_((nbits + 63) / 64, 0), nbits_(nbits) {}

  std::size_t size() const { return nbits_; }
  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* words() const { return words_.data(); }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  // |this AND other|
  std::size_t and_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  // |this AND NOT other|
  std::size_t andnot_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & ~o.words_[i]);
    return c;
  }

  // |{ i > lo : this[i] AND other[i] }| — the strict tail of an intersection.
  std::size_t and_count_above(const Bitset& o, std::size_t lo) const {
    std::size_t start = (lo + 1) >> 6;
    if (start >= words_.size()) return 0;
    std::uint64_t first = words_[start] & o.words_[start];
    std::size_t rem = (lo + 1) & 63;
    if (rem) first &= ~std::uint64_t{0} << rem;
    std::size_t c = std::popcount(first);
    for (std::size_t i = start + 1; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& andnot(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  // out = a & b, out = (a & b) restricted to indices > lo, out = a & ~b.
  // Destination must already have the right size.
  static void intersect_into(const Bitset& a, const Bitset& b, Bitset& out) {
    for (std::size_t i = 0; i < out.words_.size(); ++i)
      out.words_[i] = a.words_[i] & b.words_[i];
  }
  static void intersect_above_into(const Bitset& a, const Bitset& b,
                                   std::size_t lo, Bitset& out) {
    std::size_t start = (lo + 1) >> 6;
    for (std::size_t i = 0; i < start && i < out.words_.size(); ++i)
      out.words_[i] = 0;
    if (start >= out.words_.size()) return;
    std::uint64_t w = a.words_[start] & b.words_[start];
    std::size_t rem = (lo + 1) & 63;
    if (rem) w &= ~std::uint64_t{0} << rem;
    out.words_[start] = w;
    for (std::size_t i = start + 1; i < out.words_.size(); ++i)
      out.words_[i] = a.words_[i] & b.words_[i];
  }

  // Complement within the first `size()` bits; tail bits stay clear.
  Bitset complement() const {
    Bitset r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  // First set index >= from, or npos.
  std::size_t next_set(std::size_t from) const {
    if (from >= nbits_) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + std::countr_zero(w);
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f((wi << 6) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  bool operator==(const Bitset& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }

 private:
  void trim() {
    std::size_t rem = nbits_ & 63;
    if (rem && !words_.empty()) words_.back() &= (~std::uint64_t{0} >> (64 - rem));
  }

  std::vector<std::uint64_t> words_;
  std::size_t nbits_ = 0;
};

}  // namespace graphprof
