// Compiled with -mavx2; only reached through the dispatch table after a
// CPUID check.

#include "gatecolor/simd/bitset_kernels.hpp"

#if defined(GATECOLOR_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <bit>

namespace gatecolor::simd::avx2 {

namespace {

constexpr std::size_t kLaneWords = 4;

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Nibble-lookup popcount (Mula): per-byte counts, then horizontal byte sums
// into the four 64-bit lanes via SAD against zero.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts =
      _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) Word lanes[kLaneWords];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

}  // namespace

bool intersects(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLaneWords <= words; i += kLaneWords) {
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  }
  for (; i < words; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

void or_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLaneWords <= words; i += kLaneWords) {
    store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + kLaneWords <= words; i += kLaneWords) {
    store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  }
  for (; i < words; ++i) dst[i] &= src[i];
}

std::size_t popcount(const Word* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLaneWords <= words; i += kLaneWords) {
    acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLaneWords <= words; i += kLaneWords) {
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

}  // namespace gatecolor::simd::avx2

#endif
