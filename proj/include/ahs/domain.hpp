#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "ahs/errors.hpp"

namespace ahs {

using Cplx = std::complex<double>;
using Rat = mpq_class;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Relative floor below which a leading coefficient counts as a zero
// (reciprocal, derivative-at-base guards).  Scaled by the largest
// coefficient magnitude of the operand.
inline constexpr double kSingularFloorRel = 1e-12;

// Default comparison tolerances for floating-point checks.
struct Tol {
  double rel = 1e-10;
  double abs = 1e-14;
};

inline bool approx_eq(double a, double b, const Tol& t = {}) {
  const double d = std::abs(a - b);
  return d <= t.abs || d <= t.rel * std::max(std::abs(a), std::abs(b));
}

inline bool approx_eq(const Cplx& a, const Cplx& b, const Tol& t = {}) {
  const double d = std::abs(a - b);
  return d <= t.abs || d <= t.rel * std::max(std::abs(a), std::abs(b));
}

// Canonicalized rational from a num/den pair.  mpq_class's two-argument
// constructor does not reduce, so every construction funnels through here.
inline Rat rat(long num, long den = 1) {
  if (den == 0) throw math_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
  mpz_class n(num), d(den);
  if (d == 0) throw math_error("rational with zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

// Exact binomial coefficient as a rational.
inline Rat rat_binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

// Traits separating the exact rational domain from the complex floating
// one.  Algorithms branch on `exact` for equality semantics and on
// `magnitude` for floating floors.
template <class T>
struct domain_traits;

template <>
struct domain_traits<Rat> {
  static constexpr bool exact = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_int(long n) { return Rat(n); }
  static bool is_zero(const Rat& a) { return sgn(a) == 0; }
  static bool eq(const Rat& a, const Rat& b, const Tol& = {}) { return a == b; }
  static double magnitude(const Rat& a) { return std::abs(a.get_d()); }
};

template <>
struct domain_traits<Cplx> {
  static constexpr bool exact = false;
  static Cplx zero() { return Cplx(0.0, 0.0); }
  static Cplx one() { return Cplx(1.0, 0.0); }
  static Cplx from_int(long n) { return Cplx(static_cast<double>(n), 0.0); }
  static bool is_zero(const Cplx& a) { return a == Cplx(0.0, 0.0); }
  static bool eq(const Cplx& a, const Cplx& b, const Tol& t = {}) {
    return approx_eq(a, b, t);
  }
  static double magnitude(const Cplx& a) { return std::abs(a); }
};

// Magnitude of a difference, usable uniformly across domains when a check
// wants a single residual number (exactly zero iff equal in the exact case).
inline double diff_magnitude(const Rat& a, const Rat& b) {
  return a == b ? 0.0 : domain_traits<Rat>::magnitude(a - b);
}
inline double diff_magnitude(const Cplx& a, const Cplx& b) {
  return std::abs(a - b);
}

}  // namespace ahs
