#include "chibound/simd/bitset_kernels.hpp"

#include <stdexcept>
#include <string>

namespace chibound::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
  case Isa::scalar:
    return "scalar";
  case Isa::avx2:
    return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
  case Isa::scalar:
    return true;
  case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
  }
  return false;
}

const BitsetKernels& kernels_for(Isa isa) {
  if (!isa_available(isa))
    throw std::invalid_argument("bitset kernels for " + std::string(isa_name(isa)) +
                                " are not available on this CPU");
#if defined(__x86_64__) || defined(_M_X64)
  if (isa == Isa::avx2) return detail::avx2_kernels();
#endif
  return detail::scalar_kernels();
}

const BitsetKernels& kernels() {
  static const BitsetKernels& selected =
      isa_available(Isa::avx2) ? kernels_for(Isa::avx2) : detail::scalar_kernels();
  return selected;
}

} // namespace chibound::simd
