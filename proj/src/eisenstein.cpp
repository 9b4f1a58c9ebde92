#include "ahs/eisenstein.hpp"

#include <cmath>

#include "ahs/kernels.hpp"

namespace ahs {

mpz_class sigma_pow(unsigned k, std::uint64_t n) {
  if (n == 0) throw math_error("sigma_pow needs n >= 1");
  mpz_class total = 0;
  mpz_class dk, ek;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::uint64_t e = n / d;
    mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
    total += dk;
    if (e != d) {
      mpz_ui_pow_ui(ek.get_mpz_t(), e, k);
      total += ek;
    }
  }
  return total;
}

namespace {

struct EisParams {
  unsigned sigma_k;
  long scale;
};

EisParams params_for(EisForm which) {
  switch (which) {
    case EisForm::E2: return {1, -24};
    case EisForm::E4: return {3, 240};
    case EisForm::E6: return {5, -504};
  }
  throw math_error("unknown Eisenstein form");
}

}  // namespace

QSeries eisenstein_q(EisForm which, int order) {
  if (order < 0) throw order_error("negative q-series order");
  const EisParams p = params_for(which);
  QSeries s = QSeries::zeros(order);
  s.a[0] = 1;
  for (int n = 1; n <= order; ++n)
    s.a[n] = Rat(p.scale * sigma_pow(p.sigma_k, static_cast<std::uint64_t>(n)));
  return s;
}

QSeries sigma_series(unsigned k, int order, const Rat& scale) {
  if (order < 0) throw order_error("negative q-series order");
  QSeries s = QSeries::zeros(order);
  s.a[0] = 1;
  for (int n = 1; n <= order; ++n)
    s.a[n] = scale * Rat(sigma_pow(k, static_cast<std::uint64_t>(n)));
  return s;
}

std::vector<double> eisenstein_coeffs_d(EisForm which, std::size_t count) {
  // Divisor sieve: one pass over d, adding d^k to every multiple.  The
  // powers are accumulated in double; for the largest supported orders the
  // relative rounding stays at machine-epsilon level, which the floating
  // evaluation path absorbs in its tail reporting.
  const EisParams p = params_for(which);
  std::vector<double> c(count, 0.0);
  if (count == 0) return c;
  c[0] = 1.0;
  for (std::size_t d = 1; d < count; ++d) {
    const double dd = static_cast<double>(d);
    double dk = dd;
    for (unsigned i = 1; i < p.sigma_k; ++i) dk *= dd;
    for (std::size_t m = d; m < count; m += d) c[m] += dk;
  }
  const double scale = static_cast<double>(p.scale);
  for (std::size_t n = 1; n < count; ++n) c[n] *= scale;
  return c;
}

std::vector<double> disc_coeffs_d(std::size_t count) {
  const std::vector<double> e4 = eisenstein_coeffs_d(EisForm::E4, count);
  const std::vector<double> e6 = eisenstein_coeffs_d(EisForm::E6, count);
  // Work in complex scratch to reuse the dispatched convolution.
  std::vector<Cplx> a(count), sq(count), cu(count);
  for (std::size_t i = 0; i < count; ++i) a[i] = e4[i];
  kernels::conv_cplx(a.data(), count, a.data(), count, sq.data(), count);
  kernels::conv_cplx(sq.data(), count, a.data(), count, cu.data(), count);
  for (std::size_t i = 0; i < count; ++i) a[i] = e6[i];
  kernels::conv_cplx(a.data(), count, a.data(), count, sq.data(), count);
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = (cu[i].real() - sq[i].real()) / 1728.0;
  return out;
}

}  // namespace ahs
