#pragma once
// Row kernels for dense elimination over a prime field F_p, p < 16.
//
// Every entry is a residue in [0, p) stored in one byte. The scalar variants
// are the reference; vector variants must agree with them bit for bit. The
// active set is chosen once at startup from the CPU features, and can be pinned
// with COHEXT_KERNELS=scalar|avx2|neon.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cohext::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

struct RowKernels {
  Isa isa;
  /// dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy_mod)(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n, std::uint8_t p);
  /// dst[i] = (c * dst[i]) mod p
  void (*scale_mod)(std::uint8_t* dst, std::uint8_t c, std::size_t n, std::uint8_t p);
  /// Index of the first nonzero byte, or n.
  std::size_t (*first_nonzero)(const std::uint8_t* row, std::size_t n);
};

const RowKernels& scalar();
/// nullptr when the variant was not compiled in or the CPU lacks it.
const RowKernels* avx2();
const RowKernels* neon();

/// The dispatched set used by the library.
const RowKernels& active();

}  // namespace cohext::kernels
