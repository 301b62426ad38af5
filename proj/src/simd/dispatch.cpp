#include <atomic>
#include <stdexcept>
#include <string>

#include "gatecolor/simd/bitset_kernels.hpp"

namespace gatecolor::simd {

namespace {

const BitsetKernels kScalar{Isa::Scalar,       scalar::intersects, scalar::or_into,
                            scalar::and_into,  scalar::popcount,   scalar::and_popcount};

#if defined(GATECOLOR_HAVE_AVX2_KERNELS)
const BitsetKernels kAvx2{Isa::Avx2,      avx2::intersects, avx2::or_into,
                          avx2::and_into, avx2::popcount,   avx2::and_popcount};
#endif

const BitsetKernels* initial_table() { return &kernels_for(best_supported_isa()); }

std::atomic<const BitsetKernels*>& active_slot() {
  static std::atomic<const BitsetKernels*> slot{initial_table()};
  return slot;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(GATECOLOR_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

const BitsetKernels& kernels_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("bitset kernels: ISA '" + std::string(isa_name(isa)) +
                                "' is not available on this machine");
  }
#if defined(GATECOLOR_HAVE_AVX2_KERNELS)
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

const BitsetKernels& active() { return *active_slot().load(std::memory_order_relaxed); }

void select_isa(Isa isa) { active_slot().store(&kernels_for(isa), std::memory_order_relaxed); }

Isa best_supported_isa() { return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace gatecolor::simd
