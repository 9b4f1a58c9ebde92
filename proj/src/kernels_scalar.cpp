#include <cmath>
#include <cstring>

#include "ahs/kernels.hpp"

namespace ahs::kernels {

void conv_cplx_scalar(const Cplx* a, std::size_t na, const Cplx* b,
                      std::size_t nb, Cplx* out, std::size_t nout) {
  for (std::size_t k = 0; k < nout; ++k) out[k] = Cplx(0.0, 0.0);
  const std::size_t imax = na < nout ? na : nout;
  for (std::size_t i = 0; i < imax; ++i) {
    const Cplx ai = a[i];
    const std::size_t jmax = nb < nout - i ? nb : nout - i;
    for (std::size_t j = 0; j < jmax; ++j) {
      const Cplx bj = b[j];
      out[i + j] += Cplx(ai.real() * bj.real() - ai.imag() * bj.imag(),
                         ai.real() * bj.imag() + ai.imag() * bj.real());
    }
  }
}

namespace {

// q^n for q = exp(2*pi*i*z), computed from libm rather than by stepping,
// used to pin down drift at resync boundaries.
inline Cplx power_from_libm(Cplx z, double n) {
  const double two_pi = 2.0 * kPi;
  const double mag = std::exp(-two_pi * (z.imag() * n));
  const double ph = two_pi * (z.real() * n);
  return Cplx(mag * std::cos(ph), mag * std::sin(ph));
}

}  // namespace

void geom_power_sums_scalar(const double* a, std::size_t count, Cplx z,
                            Cplx* sums, std::size_t nk) {
  for (std::size_t k = 0; k < nk; ++k) sums[k] = Cplx(0.0, 0.0);
  if (count == 0 || nk == 0) return;
  const Cplx q = power_from_libm(z, 1.0);
  Cplx pw(1.0, 0.0);
  for (std::size_t n = 0; n < count; ++n) {
    if (n % kResyncStride == 0 && n != 0)
      pw = power_from_libm(z, static_cast<double>(n));
    Cplx t = a[n] * pw;
    sums[0] += t;
    const double nd = static_cast<double>(n);
    for (std::size_t k = 1; k < nk; ++k) {
      t *= nd;
      sums[k] += t;
    }
    pw = Cplx(pw.real() * q.real() - pw.imag() * q.imag(),
              pw.real() * q.imag() + pw.imag() * q.real());
  }
}

}  // namespace ahs::kernels
