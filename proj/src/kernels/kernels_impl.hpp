#pragma once

#include <cstddef>
#include <cstdint>

namespace cohext::kernels::detail {

void axpy_mod_scalar(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n, std::uint8_t p);
void scale_mod_scalar(std::uint8_t* dst, std::uint8_t c, std::size_t n, std::uint8_t p);
std::size_t first_nonzero_scalar(const std::uint8_t* row, std::size_t n);

#if defined(COHEXT_HAVE_AVX2)
void axpy_mod_avx2(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n, std::uint8_t p);
void scale_mod_avx2(std::uint8_t* dst, std::uint8_t c, std::size_t n, std::uint8_t p);
std::size_t first_nonzero_avx2(const std::uint8_t* row, std::size_t n);
#endif

#if defined(COHEXT_HAVE_NEON)
void axpy_mod_neon(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n, std::uint8_t p);
void scale_mod_neon(std::uint8_t* dst, std::uint8_t c, std::size_t n, std::uint8_t p);
std::size_t first_nonzero_neon(const std::uint8_t* row, std::size_t n);
#endif

// Table of c * s mod p for s in [0, 16).
inline void product_table(std::uint8_t c, std::uint8_t p, std::uint8_t (&table)[16]) {
  for (int s = 0; s < 16; ++s) table[s] = static_cast<std::uint8_t>((c * s) % p);
}

}  // namespace cohext::kernels::detail
