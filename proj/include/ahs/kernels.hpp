#pragma once

#include <cstddef>
#include <string>

#include "ahs/domain.hpp"

// Hot floating-point inner loops behind a runtime-selected backend.
// Exact-rational arithmetic never goes through here; GMP limb work does
// not vectorize and stays on the plain scalar paths of the callers.
//
// Backend selection: AHS_KERNELS=scalar|avx2|auto (default auto) read once
// at first use; set_backend() overrides programmatically.  The AVX2 variant
// is only eligible when the CPU reports the feature.  Both variants are
// equivalence-tested against each other and against a long-double
// reference.
namespace ahs::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
void set_backend(Backend b);
bool avx2_supported();
std::string backend_name(Backend b);

// Truncated Cauchy product: out[k] = sum_{i+j=k} a[i]*b[j] for k < nout,
// indices clipped to the given lengths.  out must not alias a or b.
void conv_cplx(const Cplx* a, std::size_t na, const Cplx* b, std::size_t nb,
               Cplx* out, std::size_t nout);

// Weighted geometric power sums for q-expansion jets:
//   sums[k] = sum_{n=0}^{count-1} a[n] * n^k * q^n,   0 <= k < nk,
// with q = exp(2*pi*i*z).  The caller applies the (2*pi*i)^k / k! factors.
// Power streams are resynchronized from exp/cos every kResyncStride terms
// so rounding drift stays bounded independently of count.
void geom_power_sums(const double* a, std::size_t count, Cplx z, Cplx* sums,
                     std::size_t nk);

inline constexpr std::size_t kResyncStride = 4096;

// Direct entry points for the equivalence tests.
void conv_cplx_scalar(const Cplx* a, std::size_t na, const Cplx* b,
                      std::size_t nb, Cplx* out, std::size_t nout);
void geom_power_sums_scalar(const double* a, std::size_t count, Cplx z,
                            Cplx* sums, std::size_t nk);
#if defined(__x86_64__) || defined(_M_X64)
void conv_cplx_avx2(const Cplx* a, std::size_t na, const Cplx* b,
                    std::size_t nb, Cplx* out, std::size_t nout);
void geom_power_sums_avx2(const double* a, std::size_t count, Cplx z,
                          Cplx* sums, std::size_t nk);
#endif

}  // namespace ahs::kernels
