#include <cmath>
#include <cstring>
#include <vector>

#include <immintrin.h>

#include "ahs/kernels.hpp"

// Compiled with -mavx2 -mfma; the dispatcher only routes here after a
// runtime CPU feature check.

namespace ahs::kernels {

namespace {

inline Cplx power_from_libm(Cplx z, double n) {
  const double two_pi = 2.0 * kPi;
  const double mag = std::exp(-two_pi * (z.imag() * n));
  const double ph = two_pi * (z.real() * n);
  return Cplx(mag * std::cos(ph), mag * std::sin(ph));
}

constexpr std::size_t kMaxK = 24;

}  // namespace

void conv_cplx_avx2(const Cplx* a, std::size_t na, const Cplx* b,
                    std::size_t nb, Cplx* out, std::size_t nout) {
  if (nout == 0) return;
  // Split to SoA so one lane carries one coefficient.
  std::vector<double> ar(na), ai(na), br(nb), bi(nb), outr(nout, 0.0),
      outi(nout, 0.0);
  for (std::size_t i = 0; i < na; ++i) {
    ar[i] = a[i].real();
    ai[i] = a[i].imag();
  }
  for (std::size_t j = 0; j < nb; ++j) {
    br[j] = b[j].real();
    bi[j] = b[j].imag();
  }
  const std::size_t imax = na < nout ? na : nout;
  for (std::size_t i = 0; i < imax; ++i) {
    const __m256d var = _mm256_set1_pd(ar[i]);
    const __m256d vai = _mm256_set1_pd(ai[i]);
    const std::size_t jmax = nb < nout - i ? nb : nout - i;
    std::size_t j = 0;
    for (; j + 4 <= jmax; j += 4) {
      const __m256d vbr = _mm256_loadu_pd(&br[j]);
      const __m256d vbi = _mm256_loadu_pd(&bi[j]);
      __m256d vor = _mm256_loadu_pd(&outr[i + j]);
      __m256d voi = _mm256_loadu_pd(&outi[i + j]);
      vor = _mm256_fmadd_pd(var, vbr, vor);
      vor = _mm256_fnmadd_pd(vai, vbi, vor);
      voi = _mm256_fmadd_pd(var, vbi, voi);
      voi = _mm256_fmadd_pd(vai, vbr, voi);
      _mm256_storeu_pd(&outr[i + j], vor);
      _mm256_storeu_pd(&outi[i + j], voi);
    }
    for (; j < jmax; ++j) {
      outr[i + j] += ar[i] * br[j] - ai[i] * bi[j];
      outi[i + j] += ar[i] * bi[j] + ai[i] * br[j];
    }
  }
  for (std::size_t k = 0; k < nout; ++k) out[k] = Cplx(outr[k], outi[k]);
}

void geom_power_sums_avx2(const double* a, std::size_t count, Cplx z,
                          Cplx* sums, std::size_t nk) {
  if (nk == 0) return;
  if (nk > kMaxK || count < 8) {
    geom_power_sums_scalar(a, count, z, sums, nk);
    return;
  }
  __m256d accr[kMaxK], acci[kMaxK];
  for (std::size_t k = 0; k < nk; ++k) {
    accr[k] = _mm256_setzero_pd();
    acci[k] = _mm256_setzero_pd();
  }
  const Cplx q4 = power_from_libm(z, 4.0);
  const __m256d q4r = _mm256_set1_pd(q4.real());
  const __m256d q4i = _mm256_set1_pd(q4.imag());
  const __m256d four = _mm256_set1_pd(4.0);
  __m256d pr = _mm256_setzero_pd();
  __m256d pi = _mm256_setzero_pd();
  __m256d nv = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  static_assert(kResyncStride % 4 == 0);
  const std::size_t main = count & ~std::size_t{3};
  for (std::size_t n = 0; n < main; n += 4) {
    if (n % kResyncStride == 0) {
      const Cplx p0 = power_from_libm(z, static_cast<double>(n));
      const Cplx p1 = power_from_libm(z, static_cast<double>(n + 1));
      const Cplx p2 = power_from_libm(z, static_cast<double>(n + 2));
      const Cplx p3 = power_from_libm(z, static_cast<double>(n + 3));
      pr = _mm256_setr_pd(p0.real(), p1.real(), p2.real(), p3.real());
      pi = _mm256_setr_pd(p0.imag(), p1.imag(), p2.imag(), p3.imag());
    }
    const __m256d av = _mm256_loadu_pd(a + n);
    __m256d wr = _mm256_mul_pd(av, pr);
    __m256d wi = _mm256_mul_pd(av, pi);
    accr[0] = _mm256_add_pd(accr[0], wr);
    acci[0] = _mm256_add_pd(acci[0], wi);
    for (std::size_t k = 1; k < nk; ++k) {
      wr = _mm256_mul_pd(wr, nv);
      wi = _mm256_mul_pd(wi, nv);
      accr[k] = _mm256_add_pd(accr[k], wr);
      acci[k] = _mm256_add_pd(acci[k], wi);
    }
    const __m256d npr =
        _mm256_sub_pd(_mm256_mul_pd(pr, q4r), _mm256_mul_pd(pi, q4i));
    const __m256d npi =
        _mm256_add_pd(_mm256_mul_pd(pr, q4i), _mm256_mul_pd(pi, q4r));
    pr = npr;
    pi = npi;
    nv = _mm256_add_pd(nv, four);
  }
  for (std::size_t k = 0; k < nk; ++k) {
    alignas(32) double bufr[4], bufi[4];
    _mm256_store_pd(bufr, accr[k]);
    _mm256_store_pd(bufi, acci[k]);
    sums[k] = Cplx((bufr[0] + bufr[1]) + (bufr[2] + bufr[3]),
                   (bufi[0] + bufi[1]) + (bufi[2] + bufi[3]));
  }
  for (std::size_t n = main; n < count; ++n) {
    const Cplx pw = power_from_libm(z, static_cast<double>(n));
    Cplx t = a[n] * pw;
    sums[0] += t;
    const double nd = static_cast<double>(n);
    for (std::size_t k = 1; k < nk; ++k) {
      t *= nd;
      sums[k] += t;
    }
  }
}

}  // namespace ahs::kernels
