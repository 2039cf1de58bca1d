// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace cohext::kernels::detail {

namespace {

// Both operands are residues below p <= 15, so the product lookup through
// pshufb is exact and the sum stays below 2p. One conditional subtraction
// (unsigned min against the wrapped difference) finishes the reduction.
inline __m256i reduce_once(__m256i sum, __m256i vp) { return _mm256_min_epu8(sum, _mm256_sub_epi8(sum, vp)); }

inline __m256i broadcast_table(std::uint8_t c, std::uint8_t p) {
  alignas(16) std::uint8_t table[16];
  product_table(c, p, table);
  __m128i t = _mm_load_si128(reinterpret_cast<const __m128i*>(table));
  return _mm256_broadcastsi128_si256(t);
}

}  // namespace

void axpy_mod_avx2(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n, std::uint8_t p) {
  const __m256i table = broadcast_table(c, p);
  const __m256i vp = _mm256_set1_epi8(static_cast<char>(p));
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i prod = _mm256_shuffle_epi8(table, s);
    __m256i r = reduce_once(_mm256_add_epi8(d, prod), vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  axpy_mod_scalar(dst + i, src + i, c, n - i, p);
}

void scale_mod_avx2(std::uint8_t* dst, std::uint8_t c, std::size_t n, std::uint8_t p) {
  const __m256i table = broadcast_table(c, p);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_shuffle_epi8(table, d));
  }
  scale_mod_scalar(dst + i, c, n - i, p);
}

std::size_t first_nonzero_avx2(const std::uint8_t* row, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    unsigned mask = ~static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
    if (mask) return i + static_cast<std::size_t>(__builtin_ctz(mask));
  }
  return i + first_nonzero_scalar(row + i, n - i);
}

}  // namespace cohext::kernels::detail
