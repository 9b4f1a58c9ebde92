#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ahs/domain.hpp"
#include "ahs/kernels.hpp"

namespace ahs {

// Truncated power series ("jet") of a function around a base point:
//   f(z) = sum_{k=0}^{order} c_k (z - base)^k + O((z - base)^{order+1}).
// base == nullopt marks a formal jet (no concrete expansion point).
// Arithmetic yields min(order(a), order(b)); nothing promotes silently.
template <class T>
class Jet {
 public:
  Jet(std::optional<T> base, std::vector<T> coeffs)
      : base_(std::move(base)), c_(std::move(coeffs)) {
    if (c_.empty()) throw order_error("jet needs at least the constant term");
  }

  static Jet constant(const T& v, int order, std::optional<T> base = {}) {
    std::vector<T> c(static_cast<std::size_t>(order) + 1,
                     domain_traits<T>::zero());
    c[0] = v;
    return Jet(std::move(base), std::move(c));
  }

  // The identity function: value c0 at the base, slope one.
  static Jet variable(const T& value_at_base, int order,
                      std::optional<T> base = {}) {
    if (order < 1) throw order_error("variable jet needs order >= 1");
    Jet j = constant(value_at_base, order, std::move(base));
    j.c_[1] = domain_traits<T>::one();
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<T>& coeffs() const { return c_; }
  const std::optional<T>& base() const { return base_; }
  const T& value() const { return c_[0]; }

  Jet truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
      throw order_error("truncation order out of range");
    return Jet(base_,
               std::vector<T>(c_.begin(), c_.begin() + new_order + 1));
  }

  Jet with_base(std::optional<T> b) const { return Jet(std::move(b), c_); }

  double max_coeff_magnitude() const {
    double m = 0.0;
    for (const T& c : c_) m = std::max(m, domain_traits<T>::magnitude(c));
    return m;
  }

 private:
  std::optional<T> base_;
  std::vector<T> c_;
};

using JetQ = Jet<Rat>;
using JetC = Jet<Cplx>;

namespace detail {

template <class T>
std::optional<T> common_base(const Jet<T>& a, const Jet<T>& b) {
  if (!a.base() && !b.base()) return std::nullopt;
  if (a.base() && b.base()) {
    if (!domain_traits<T>::eq(*a.base(), *b.base()))
      throw base_point_mismatch("jets expanded around different points");
    return a.base();
  }
  throw base_point_mismatch("cannot combine a formal jet with a based jet");
}

}  // namespace detail

template <class T>
Jet<T> jet_add(const Jet<T>& a, const Jet<T>& b) {
  auto base = detail::common_base(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<T> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return Jet<T>(base, std::move(c));
}

template <class T>
Jet<T> jet_sub(const Jet<T>& a, const Jet<T>& b) {
  auto base = detail::common_base(a, b);
  const int n = std::min(a.order(), b.order());
  std::vector<T> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] - b[k];
  return Jet<T>(base, std::move(c));
}

template <class T>
Jet<T> jet_neg(const Jet<T>& a) {
  std::vector<T> c(a.coeffs());
  for (T& x : c) x = -x;
  return Jet<T>(a.base(), std::move(c));
}

template <class T>
Jet<T> jet_scale(const Jet<T>& a, const T& s) {
  std::vector<T> c(a.coeffs());
  for (T& x : c) x = x * s;
  return Jet<T>(a.base(), std::move(c));
}

template <class T>
Jet<T> jet_add_scalar(const Jet<T>& a, const T& s) {
  std::vector<T> c(a.coeffs());
  c[0] = c[0] + s;
  return Jet<T>(a.base(), std::move(c));
}

template <class T>
Jet<T> jet_div_int(const Jet<T>& a, long n) {
  if (n == 0) throw math_error("jet division by zero integer");
  std::vector<T> c(a.coeffs());
  const T d = domain_traits<T>::from_int(n);
  for (T& x : c) x = x / d;
  return Jet<T>(a.base(), std::move(c));
}

template <class T>
Jet<T> jet_mul(const Jet<T>& a, const Jet<T>& b) {
  auto base = detail::common_base(a, b);
  const int n = std::min(a.order(), b.order());
  const auto nout = static_cast<std::size_t>(n) + 1;
  std::vector<T> c(nout, domain_traits<T>::zero());
  if constexpr (std::is_same_v<T, Cplx>) {
    kernels::conv_cplx(a.coeffs().data(), a.coeffs().size(),
                       b.coeffs().data(), b.coeffs().size(), c.data(), nout);
  } else {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n - i; ++j) c[i + j] += a[i] * b[j];
  }
  return Jet<T>(base, std::move(c));
}

// 1/f as a jet of the same order; the constant term must be invertible.
template <class T>
Jet<T> jet_reciprocal(const Jet<T>& a) {
  const T& a0 = a[0];
  if constexpr (domain_traits<T>::exact) {
    if (domain_traits<T>::is_zero(a0))
      throw critical_point_error("reciprocal of jet with zero constant term");
  } else {
    const double floor = kSingularFloorRel * a.max_coeff_magnitude();
    if (domain_traits<T>::magnitude(a0) <= floor)
      throw critical_point_error(
          "reciprocal of jet with near-vanishing constant term");
  }
  const int n = a.order();
  std::vector<T> c(static_cast<std::size_t>(n) + 1,
                   domain_traits<T>::zero());
  const T inv0 = domain_traits<T>::one() / a0;
  c[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    T acc = domain_traits<T>::zero();
    for (int j = 1; j <= k && j <= a.order(); ++j) acc += a[j] * c[k - j];
    c[k] = -inv0 * acc;
  }
  return Jet<T>(a.base(), std::move(c));
}

// Termwise derivative; drops one order.
template <class T>
Jet<T> jet_derive(const Jet<T>& a) {
  if (a.order() < 1)
    throw order_error("cannot differentiate an order-0 jet");
  std::vector<T> c(static_cast<std::size_t>(a.order()));
  for (int k = 1; k <= a.order(); ++k)
    c[k - 1] = a[k] * domain_traits<T>::from_int(k);
  return Jet<T>(a.base(), std::move(c));
}

// Coefficients c_m .. c_order as a jet of order order-m (the function
// (f - partial sums)/(z-base)^m in the same variable).
template <class T>
Jet<T> jet_tail(const Jet<T>& a, int m) {
  if (m < 0 || m > a.order()) throw order_error("tail offset out of range");
  std::vector<T> c(a.coeffs().begin() + m, a.coeffs().end());
  return Jet<T>(a.base(), std::move(c));
}

// Plain polynomial evaluation sum c_k u^k of the truncation at offset u
// from the base point.
template <class T>
T jet_polyval(const Jet<T>& a, const T& u) {
  T acc = a[a.order()];
  for (int k = a.order() - 1; k >= 0; --k) acc = acc * u + a[k];
  return acc;
}

// f(g(.)): the inner jet's value must sit on the outer jet's base point
// (or be zero when the outer jet is formal).  Result lives at the inner
// base, order min(outer, inner).
template <class T>
Jet<T> jet_compose(const Jet<T>& outer, const Jet<T>& inner) {
  const T expect = outer.base() ? *outer.base() : domain_traits<T>::zero();
  if (!domain_traits<T>::eq(inner.value(), expect))
    throw base_point_mismatch(
        "inner jet value does not reach the outer jet's expansion point");
  const int n = std::min(outer.order(), inner.order());
  // Shifted inner: zero constant term, so powers gain valuation and the
  // Horner sweep below is exact at order n.
  std::vector<T> sc(inner.coeffs().begin(),
                    inner.coeffs().begin() + n + 1);
  sc[0] = domain_traits<T>::zero();
  const Jet<T> shifted(inner.base(), std::move(sc));
  Jet<T> acc = Jet<T>::constant(outer[n], n, inner.base());
  for (int k = n - 1; k >= 0; --k) {
    acc = jet_mul(acc, shifted);
    acc = jet_add_scalar(acc, outer[k]);
  }
  return acc;
}

// Compositional inverse of a formal jet w = c1 u + c2 u^2 + ... with
// invertible c1: returns z with w(z(v)) = v + O(v^{order+1}).
template <class T>
Jet<T> jet_compositional_inverse(const Jet<T>& w) {
  if (!domain_traits<T>::is_zero(w[0]))
    throw math_error("compositional inverse needs zero constant term");
  if (w.order() < 1)
    throw order_error("compositional inverse needs order >= 1");
  const T& c1 = w[1];
  if constexpr (domain_traits<T>::exact) {
    if (domain_traits<T>::is_zero(c1))
      throw critical_point_error("compositional inverse needs nonzero slope");
  } else {
    if (domain_traits<T>::magnitude(c1) <=
        kSingularFloorRel * w.max_coeff_magnitude())
      throw critical_point_error("compositional inverse needs nonzero slope");
  }
  const int n = w.order();
  const T inv1 = domain_traits<T>::one() / c1;
  // Coefficient recurrence: with the first k-1 coefficients of z known and
  // the rest zero, [v^k] w(z(v)) = c1*d_k + (closed terms), so each step
  // reads one composition coefficient and solves for d_k.
  std::vector<T> d(static_cast<std::size_t>(n) + 1,
                   domain_traits<T>::zero());
  d[1] = inv1;
  for (int k = 2; k <= n; ++k) {
    const Jet<T> z(std::nullopt, d);
    const T e = jet_compose(w, z)[k];
    d[k] = -e * inv1;
  }
  return Jet<T>(std::nullopt, std::move(d));
}

template <class T>
bool jet_eq(const Jet<T>& a, const Jet<T>& b, const Tol& t = {}) {
  if (a.order() != b.order()) return false;
  if (static_cast<bool>(a.base()) != static_cast<bool>(b.base())) return false;
  if (a.base() && !domain_traits<T>::eq(*a.base(), *b.base(), t)) return false;
  for (int k = 0; k <= a.order(); ++k)
    if (!domain_traits<T>::eq(a[k], b[k], t)) return false;
  return true;
}

// Largest coefficientwise difference magnitude over the common order.
template <class T>
double jet_diff_magnitude(const Jet<T>& a, const Jet<T>& b) {
  const int n = std::min(a.order(), b.order());
  double m = 0.0;
  for (int k = 0; k <= n; ++k) m = std::max(m, diff_magnitude(a[k], b[k]));
  return m;
}

}  // namespace ahs
