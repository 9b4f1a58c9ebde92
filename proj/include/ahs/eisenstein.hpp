#pragma once

#include <cstdint>
#include <vector>

#include "ahs/qseries.hpp"

namespace ahs {

enum class EisForm { E2, E4, E6 };

// sum of d^k over the divisors d of n, exact.  n >= 1.
mpz_class sigma_pow(unsigned k, std::uint64_t n);

// Exact q-expansion to the given truncation order:
//   E2 = 1 - 24 sum sigma_1(n) q^n
//   E4 = 1 + 240 sum sigma_3(n) q^n
//   E6 = 1 - 504 sum sigma_5(n) q^n
QSeries eisenstein_q(EisForm which, int order);

// 1 + scale * sum_{n>=1} sigma_k(n) q^n, exact.  Covers the level-1
// Eisenstein family beyond weight 6 (E8 = sigma_series(7, m, 480), ...).
QSeries sigma_series(unsigned k, int order, const Rat& scale);

// Same coefficients rounded to double, for the floating evaluation path.
std::vector<double> eisenstein_coeffs_d(EisForm which, std::size_t count);

// Coefficients of delta = (E4^3 - E6^2) / 1728 rounded to double, computed
// by double convolution (exact up to rounding; the integer coefficients
// exceed 2^53 quickly, which the floating path tolerates).
std::vector<double> disc_coeffs_d(std::size_t count);

}  // namespace ahs
