#pragma once

#include <algorithm>
#include <vector>

#include "ahs/domain.hpp"

namespace ahs {

// Generic coefficient hooks for power series; the default covers any type
// constructible from long (Rat, built-ins).  Exotic coefficient rings
// specialize this.
template <class C>
struct coeff_ops {
  static C zero() { return C(0); }
  static C from_long(long n) { return C(n); }
  static bool is_zero(const C& c) { return c == C(0); }
};

// Truncated q-expansion sum_{n=0}^{order} a[n] q^n.  Unlike Jet there is
// no base point; q is the formal nome.  Arithmetic truncates to the
// shorter operand, same bookkeeping rule as jets.
template <class C>
struct PowerSeries {
  std::vector<C> a;

  PowerSeries() = default;
  explicit PowerSeries(std::vector<C> coeffs) : a(std::move(coeffs)) {}

  int order() const { return static_cast<int>(a.size()) - 1; }

  static PowerSeries zeros(int order) {
    return PowerSeries(std::vector<C>(static_cast<std::size_t>(order) + 1,
                                      coeff_ops<C>::zero()));
  }
};

using QSeries = PowerSeries<Rat>;

template <class C>
PowerSeries<C> ps_add(const PowerSeries<C>& x, const PowerSeries<C>& y) {
  const int n = std::min(x.order(), y.order());
  PowerSeries<C> r = PowerSeries<C>::zeros(n);
  for (int k = 0; k <= n; ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}

template <class C>
PowerSeries<C> ps_sub(const PowerSeries<C>& x, const PowerSeries<C>& y) {
  const int n = std::min(x.order(), y.order());
  PowerSeries<C> r = PowerSeries<C>::zeros(n);
  for (int k = 0; k <= n; ++k) r.a[k] = x.a[k] - y.a[k];
  return r;
}

template <class C>
PowerSeries<C> ps_mul(const PowerSeries<C>& x, const PowerSeries<C>& y) {
  const int n = std::min(x.order(), y.order());
  PowerSeries<C> r = PowerSeries<C>::zeros(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j) r.a[i + j] = r.a[i + j] + x.a[i] * y.a[j];
  return r;
}

template <class C, class S>
PowerSeries<C> ps_scale(const PowerSeries<C>& x, const S& s) {
  PowerSeries<C> r = x;
  for (C& c : r.a) c = c * s;
  return r;
}

// theta = q d/dq.
template <class C>
PowerSeries<C> ps_theta(const PowerSeries<C>& x) {
  PowerSeries<C> r = x;
  for (int n = 0; n <= x.order(); ++n)
    r.a[n] = x.a[n] * coeff_ops<C>::from_long(n);
  return r;
}

template <class C>
PowerSeries<C> ps_truncate(const PowerSeries<C>& x, int order) {
  if (order < 0 || order > x.order())
    throw order_error("series truncation order out of range");
  return PowerSeries<C>(
      std::vector<C>(x.a.begin(), x.a.begin() + order + 1));
}

template <class C>
bool ps_eq(const PowerSeries<C>& x, const PowerSeries<C>& y) {
  return x.order() == y.order() && x.a == y.a;
}

}  // namespace ahs
