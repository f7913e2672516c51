#pragma once

// Word-parallel kernels over 64-bit bitset blocks.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant compiled in its own translation unit. The variant is chosen once at
// runtime from the CPU feature bits; the scalar table is always available so
// tests can compare the two bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace chibound::simd {

using word_t = std::uint64_t;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

struct BitsetKernels {
  Isa isa;
  std::size_t (*popcount)(std::span<const word_t> a);
  std::size_t (*and_popcount)(std::span<const word_t> a, std::span<const word_t> b);
  bool (*intersects)(std::span<const word_t> a, std::span<const word_t> b);
  // true iff a & ~b == 0
  bool (*is_subset)(std::span<const word_t> a, std::span<const word_t> b);
  void (*and_assign)(std::span<word_t> dst, std::span<const word_t> src);
  void (*or_assign)(std::span<word_t> dst, std::span<const word_t> src);
  void (*andnot_assign)(std::span<word_t> dst, std::span<const word_t> src);
};

/// Kernels picked for the running CPU.
const BitsetKernels& kernels();

/// Kernels for a specific ISA. Throws std::invalid_argument when the ISA is
/// not compiled in or not supported by the running CPU.
const BitsetKernels& kernels_for(Isa isa);

bool isa_available(Isa isa);

namespace detail {
const BitsetKernels& scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
const BitsetKernels& avx2_kernels();
#endif
} // namespace detail

} // namespace chibound::simd
