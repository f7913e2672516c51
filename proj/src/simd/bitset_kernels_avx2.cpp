// Compiled with -mavx2; only reached after a runtime CPU check.
#include "chibound/simd/bitset_kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <bit>

namespace chibound::simd::detail {
namespace {

// Nibble lookup popcount (Mula et al.), summed per 64-bit lane with SAD.
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
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i load(const word_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(word_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

std::size_t popcount_avx2(std::span<const word_t> a) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(a.data() + i)));
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t and_popcount_avx2(std::span<const word_t> a, std::span<const word_t> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_epi64(
        acc, popcount_lanes(_mm256_and_si256(load(a.data() + i), load(b.data() + i))));
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

bool intersects_avx2(std::span<const word_t> a, std::span<const word_t> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = load(a.data() + i);
    if (!_mm256_testz_si256(va, load(b.data() + i))) return true;
  }
  for (; i < n; ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

bool is_subset_avx2(std::span<const word_t> a, std::span<const word_t> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // testc(b, a) is 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(load(b.data() + i), load(a.data() + i))) return false;
  }
  for (; i < n; ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  for (std::size_t k = n; k < a.size(); ++k)
    if (a[k] != 0) return false;
  return true;
}

void and_assign_avx2(std::span<word_t> dst, std::span<const word_t> src) {
  const std::size_t n = std::min(dst.size(), src.size());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    store(dst.data() + i, _mm256_and_si256(load(dst.data() + i), load(src.data() + i)));
  for (; i < n; ++i) dst[i] &= src[i];
  for (std::size_t k = n; k < dst.size(); ++k) dst[k] = 0;
}

void or_assign_avx2(std::span<word_t> dst, std::span<const word_t> src) {
  const std::size_t n = std::min(dst.size(), src.size());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), load(src.data() + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

void andnot_assign_avx2(std::span<word_t> dst, std::span<const word_t> src) {
  const std::size_t n = std::min(dst.size(), src.size());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    store(dst.data() + i, _mm256_andnot_si256(load(src.data() + i), load(dst.data() + i)));
  for (; i < n; ++i) dst[i] &= ~src[i];
}

} // namespace

const BitsetKernels& avx2_kernels() {
  static const BitsetKernels table{
      Isa::avx2,         popcount_avx2,   and_popcount_avx2, intersects_avx2,
      is_subset_avx2,    and_assign_avx2, or_assign_avx2,    andnot_assign_avx2,
  };
  return table;
}

} // namespace chibound::simd::detail
