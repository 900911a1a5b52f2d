#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tdom/kernels.hpp"

namespace tdom {

// Fixed-width dense bit vector. Bits past size() in the last word are always zero.
class Bitset {
 public:
  using Word = kernels::Word;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_(word_count(nbits), 0) {}

  static std::size_t word_count(std::size_t nbits) { return (nbits + kWordBits - 1) / kWordBits; }

  static Bitset full(std::size_t nbits) {
    Bitset b(nbits);
    for (auto& w : b.words_) w = ~Word{0};
    b.trim();
    return b;
  }

  template <typename Range>
  static Bitset from_indices(std::size_t nbits, const Range& idx) {
    Bitset b(nbits);
    for (auto i : idx) b.set(static_cast<std::size_t>(i));
    return b;
  }

  std::size_t size() const { return nbits_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const { return kernels::active().popcount(words_); }
  bool any() const {
    for (Word w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // popcount(*this & other)
  std::size_t count_and(const Bitset& other) const { return kernels::active().and_popcount(words_, other.words_); }
  // popcount(*this & ~other)
  std::size_t count_andnot(const Bitset& other) const {
    return kernels::active().andnot_popcount(words_, other.words_);
  }
  bool intersects(const Bitset& other) const { return kernels::active().intersects(words_, other.words_); }
  bool is_subset_of(const Bitset& other) const { return kernels::active().is_subset(words_, other.words_); }

  Bitset& operator|=(const Bitset& o) {
    kernels::active().or_into(words_, o.words_);
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    kernels::active().and_into(words_, o.words_);
    return *this;
  }
  Bitset& andnot(const Bitset& o) {
    kernels::active().andnot_into(words_, o.words_);
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  // Index of the first set bit at or after `from`, or size() when none.
  std::size_t find_next(std::size_t from) const {
    if (from >= nbits_) return nbits_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return nbits_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) { return a.nbits_ == b.nbits_ && a.words_ == b.words_; }

 private:
  void trim() {
    if (nbits_ % kWordBits != 0 && !words_.empty()) words_.back() &= (Word{1} << (nbits_ % kWordBits)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

// A set of vertices of one particular graph, sized to its vertex count.
using VertexSet = Bitset;

}  // namespace tdom
