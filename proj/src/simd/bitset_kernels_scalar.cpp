#include "chibound/simd/bitset_kernels.hpp"

#include <algorithm>
#include <bit>

namespace chibound::simd::detail {
namespace {

std::size_t popcount_scalar(std::span<const word_t> a) {
  std::size_t total = 0;
  for (word_t w : a) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t and_popcount_scalar(std::span<const word_t> a, std::span<const word_t> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

bool intersects_scalar(std::span<const word_t> a, std::span<const word_t> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

bool is_subset_scalar(std::span<const word_t> a, std::span<const word_t> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  for (std::size_t i = n; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

void and_assign_scalar(std::span<word_t> dst, std::span<const word_t> src) {
  const std::size_t n = std::min(dst.size(), src.size());
  for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
  for (std::size_t i = n; i < dst.size(); ++i) dst[i] = 0;
}

void or_assign_scalar(std::span<word_t> dst, std::span<const word_t> src) {
  const std::size_t n = std::min(dst.size(), src.size());
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void andnot_assign_scalar(std::span<word_t> dst, std::span<const word_t> src) {
  const std::size_t n = std::min(dst.size(), src.size());
  for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

} // namespace

const BitsetKernels& scalar_kernels() {
  static const BitsetKernels table{
      Isa::scalar,         popcount_scalar,   and_popcount_scalar, intersects_scalar,
      is_subset_scalar,    and_assign_scalar, or_assign_scalar,    andnot_assign_scalar,
  };
  return table;
}

} // namespace chibound::simd::detail
