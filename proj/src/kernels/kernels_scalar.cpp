#include "kernels_impl.hpp"

namespace cohext::kernels::detail {

void axpy_mod_scalar(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n, std::uint8_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint8_t>((dst[i] + c * src[i]) % p);
}

void scale_mod_scalar(std::uint8_t* dst, std::uint8_t c, std::size_t n, std::uint8_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint8_t>((c * dst[i]) % p);
}

std::size_t first_nonzero_scalar(const std::uint8_t* row, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (row[i]) return i;
  return n;
}

}  // namespace cohext::kernels::detail
