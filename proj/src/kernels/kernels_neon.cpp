#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace cohext::kernels::detail {

void axpy_mod_neon(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n, std::uint8_t p) {
  std::uint8_t table_bytes[16];
  product_table(c, p, table_bytes);
  const uint8x16_t table = vld1q_u8(table_bytes);
  const uint8x16_t vp = vdupq_n_u8(p);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t prod = vqtbl1q_u8(table, vld1q_u8(src + i));
    uint8x16_t sum = vaddq_u8(vld1q_u8(dst + i), prod);
    vst1q_u8(dst + i, vminq_u8(sum, vsubq_u8(sum, vp)));
  }
  axpy_mod_scalar(dst + i, src + i, c, n - i, p);
}

void scale_mod_neon(std::uint8_t* dst, std::uint8_t c, std::size_t n, std::uint8_t p) {
  std::uint8_t table_bytes[16];
  product_table(c, p, table_bytes);
  const uint8x16_t table = vld1q_u8(table_bytes);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) vst1q_u8(dst + i, vqtbl1q_u8(table, vld1q_u8(dst + i)));
  scale_mod_scalar(dst + i, c, n - i, p);
}

std::size_t first_nonzero_neon(const std::uint8_t* row, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    if (vmaxvq_u8(vld1q_u8(row + i)) != 0) return i + first_nonzero_scalar(row + i, 16);
  }
  return i + first_nonzero_scalar(row + i, n - i);
}

}  // namespace cohext::kernels::detail
