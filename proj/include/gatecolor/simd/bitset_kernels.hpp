#pragma once

// Word-array bitset kernels with a scalar reference implementation and an
// AVX2 variant. The active table is chosen once at startup from CPUID and can
// be overridden (tests pin each ISA to check equivalence).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace gatecolor::simd {

using Word = std::uint64_t;

enum class Isa { Scalar, Avx2 };

struct BitsetKernels {
  Isa isa;
  /// True iff some bit is set in both a and b.
  bool (*intersects)(const Word* a, const Word* b, std::size_t words);
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  void (*and_into)(Word* dst, const Word* src, std::size_t words);
  std::size_t (*popcount)(const Word* a, std::size_t words);
  /// popcount(a & b) without materializing the intersection.
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
};

namespace scalar {
bool intersects(const Word* a, const Word* b, std::size_t words);
void or_into(Word* dst, const Word* src, std::size_t words);
void and_into(Word* dst, const Word* src, std::size_t words);
std::size_t popcount(const Word* a, std::size_t words);
std::size_t and_popcount(const Word* a, const Word* b, std::size_t words);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define GATECOLOR_HAVE_AVX2_KERNELS 1
namespace avx2 {
bool intersects(const Word* a, const Word* b, std::size_t words);
void or_into(Word* dst, const Word* src, std::size_t words);
void and_into(Word* dst, const Word* src, std::size_t words);
std::size_t popcount(const Word* a, std::size_t words);
std::size_t and_popcount(const Word* a, const Word* b, std::size_t words);
}  // namespace avx2
#endif

bool isa_supported(Isa isa);

/// Kernel table for a specific ISA. Throws std::invalid_argument when the ISA
/// is not compiled in or not supported by the running CPU.
const BitsetKernels& kernels_for(Isa isa);

/// Currently selected kernel table.
const BitsetKernels& active();

/// Replaces the active table. Not meant to be called concurrently with
/// kernel use.
void select_isa(Isa isa);

Isa best_supported_isa();

std::string_view isa_name(Isa isa);

}  // namespace gatecolor::simd
