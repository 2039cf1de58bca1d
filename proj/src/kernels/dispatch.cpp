#include <cstdlib>
#include <string>

#include "cohext/kernels.hpp"
#include "kernels_impl.hpp"

namespace cohext::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

const RowKernels& scalar() {
  static const RowKernels k{Isa::Scalar, detail::axpy_mod_scalar, detail::scale_mod_scalar,
                            detail::first_nonzero_scalar};
  return k;
}

const RowKernels* avx2() {
#if defined(COHEXT_HAVE_AVX2)
  static const RowKernels k{Isa::Avx2, detail::axpy_mod_avx2, detail::scale_mod_avx2, detail::first_nonzero_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &k : nullptr;
#else
  return nullptr;
#endif
}

const RowKernels* neon() {
#if defined(COHEXT_HAVE_NEON)
  static const RowKernels k{Isa::Neon, detail::axpy_mod_neon, detail::scale_mod_neon, detail::first_nonzero_neon};
  return &k;
#else
  return nullptr;
#endif
}

namespace {

const RowKernels& select() {
  const char* forced = std::getenv("COHEXT_KERNELS");
  std::string want = forced ? forced : "";
  if (want == "scalar") return scalar();
  if (want == "avx2" && avx2()) return *avx2();
  if (want == "neon" && neon()) return *neon();
  if (const RowKernels* k = avx2()) return *k;
  if (const RowKernels* k = neon()) return *k;
  return scalar();
}

}  // namespace

const RowKernels& active() {
  static const RowKernels& k = select();
  return k;
}

}  // namespace cohext::kernels
