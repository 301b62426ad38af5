#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gatecolor/simd/bitset_kernels.hpp"

namespace gatecolor {

using simd::Word;

constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for_bits(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Fixed-size bitset backed by 64-bit words; bulk operations go through the
/// active SIMD kernel table.
class DynamicBitset {
 public:
  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t bits) : bits_(bits), words_(words_for_bits(bits), 0) {}

  std::size_t size() const { return bits_; }
  std::size_t word_count() const { return words_.size(); }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  void set_all() {
    std::fill(words_.begin(), words_.end(), ~Word{0});
    trim();
  }

  bool intersects(std::span<const Word> other) const {
    return simd::active().intersects(words_.data(), other.data(), words_.size());
  }
  void or_with(std::span<const Word> other) { simd::active().or_into(words_.data(), other.data(), words_.size()); }
  void and_with(std::span<const Word> other) {
    simd::active().and_into(words_.data(), other.data(), words_.size());
  }
  std::size_t count() const { return simd::active().popcount(words_.data(), words_.size()); }
  bool none() const {
    for (Word w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        f(w * kWordBits + bit);
        word &= word - 1;
      }
    }
  }

  bool operator==(const DynamicBitset&) const = default;

 private:
  void trim() {
    const std::size_t tail = bits_ % kWordBits;
    if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace gatecolor
