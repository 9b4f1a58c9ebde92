#pragma once

#include <functional>
#include <vector>

#include "ahs/jet.hpp"
#include "ahs/moebius.hpp"

namespace ahs {

// Invariants S_n of a locally injective function f, defined by
//   f'(z) / (f(w) - f(z)) = 1/(w-z) - sum_{n>=1} S_n(z) (w-z)^{n-1}.
// S_1 = f''/(2 f'), 6 S_2 is the classical Schwarzian derivative.

// Scalar values S_1..S_N at one point (index 1-based through S()).
template <class T>
struct AharonovValues {
  std::vector<T> s;

  const T& S(int n) const {
    if (n < 1 || n > max_n()) throw order_error("S_n index out of range");
    return s[static_cast<std::size_t>(n) - 1];
  }
  int max_n() const { return static_cast<int>(s.size()); }
};

// Jets of S_1..S_N around the expansion point of the defining jet.
template <class T>
struct AharonovJets {
  std::vector<Jet<T>> s;

  const Jet<T>& S(int n) const {
    if (n < 1 || n > max_n()) throw order_error("S_n index out of range");
    return s[static_cast<std::size_t>(n) - 1];
  }
  int max_n() const { return static_cast<int>(s.size()); }

  AharonovValues<T> values() const {
    AharonovValues<T> v;
    v.s.reserve(s.size());
    for (const auto& j : s) v.s.push_back(j.value());
    return v;
  }
};

// Outcome of an identity check: worst absolute and relative deviation over
// all compared coefficients/points.  In the exact domain a pass means the
// deviation is literally zero.
struct CheckReport {
  double max_abs = 0.0;
  double max_rel = 0.0;
  long cases = 0;
  bool exact_domain = false;

  bool pass(double tol_rel) const {
    return exact_domain ? max_abs == 0.0 : max_rel <= tol_rel;
  }

  void merge(const CheckReport& o) {
    max_abs = std::max(max_abs, o.max_abs);
    max_rel = std::max(max_rel, o.max_rel);
    cases += o.cases;
    exact_domain = exact_domain || o.exact_domain;
  }
};

namespace detail {

template <class T>
void absorb_diff(CheckReport& r, const T& got, const T& want) {
  const double ad = diff_magnitude(got, want);
  const double scale = std::max(domain_traits<T>::magnitude(got),
                                domain_traits<T>::magnitude(want));
  r.max_abs = std::max(r.max_abs, ad);
  r.max_rel = std::max(r.max_rel, ad / std::max(scale, 1e-300));
  r.cases += 1;
  r.exact_domain = domain_traits<T>::exact;
}

inline long long ll_binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class T>
T binom_as(int n, int k) {
  return domain_traits<T>::from_int(ll_binom(n, k));
}

}  // namespace detail

// f''/f' as a jet (order drops by 2).  Equals 2 S_1.
template <class T>
Jet<T> pre_schwarzian(const Jet<T>& f) {
  if (f.order() < 2) throw order_error("pre-Schwarzian needs order >= 2");
  const Jet<T> d1 = jet_derive(f);
  const Jet<T> d2 = jet_derive(d1);
  return jet_mul(d2, jet_reciprocal(d1.truncated(f.order() - 2)));
}

// Classical Schwarzian derivative (f''/f')' - (f''/f')^2 / 2 as a jet
// (order drops by 3).  Equals 6 S_2.
template <class T>
Jet<T> schwarzian_classical(const Jet<T>& f) {
  if (f.order() < 3) throw order_error("Schwarzian needs order >= 3");
  const Jet<T> p = pre_schwarzian(f);
  const Jet<T> dp = jet_derive(p);
  const Jet<T> p2 = jet_mul(p, p).truncated(f.order() - 3);
  return jet_sub(dp, jet_div_int(p2, 2));
}

// S_1..S_N at the expansion point from the generating identity:
// with P(u) = sum_{k>=1} c_k u^{k-1},  c_1 / P(u) = 1 - sum S_n u^n.
template <class T>
AharonovValues<T> aharonov_direct(const Jet<T>& f, int N) {
  if (N < 1) throw order_error("need N >= 1");
  if (f.order() < N + 1)
    throw order_error("aharonov_direct needs jet order >= N+1");
  const Jet<T> p = jet_tail(f, 1).truncated(N);
  const Jet<T> q = jet_scale(jet_reciprocal(p), f[1]);
  AharonovValues<T> out;
  out.s.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) out.s.push_back(-q[n]);
  return out;
}

// Jets of S_1..S_N via the derivative recurrence
//   (n+1) S_n = S_{n-1}' + sum_{k=2}^{n-2} S_k S_{n-k}   (n >= 3),
// seeded by S_1 = f''/(2f') and 6 S_2 = classical Schwarzian.  The sum is
// empty for n = 3.  S_n comes out with order f.order()-n-1, so the input
// must carry order >= N+3 for every returned jet to have order >= 2.
template <class T>
AharonovJets<T> aharonov_recursive(const Jet<T>& f, int N) {
  if (N < 1) throw order_error("need N >= 1");
  if (f.order() < N + 3)
    throw order_error("aharonov_recursive needs jet order >= N+3");
  AharonovJets<T> out;
  out.s.reserve(static_cast<std::size_t>(N));
  out.s.push_back(jet_div_int(pre_schwarzian(f), 2));
  if (N >= 2) out.s.push_back(jet_div_int(schwarzian_classical(f), 6));
  for (int n = 3; n <= N; ++n) {
    Jet<T> acc = jet_derive(out.s[static_cast<std::size_t>(n) - 2]);
    const int target = acc.order();
    for (int k = 2; k <= n - 2; ++k) {
      const Jet<T> prod =
          jet_mul(out.s[static_cast<std::size_t>(k) - 1],
                  out.s[static_cast<std::size_t>(n - k) - 1])
              .truncated(target);
      acc = jet_add(acc, prod);
    }
    out.s.push_back(jet_div_int(acc, n + 1));
  }
  return out;
}

// Bivariate form: u^2 f'(z+u) f'(z) / (f(z+u)-f(z))^2 = 1 + sum_{n>=2}
// (n-1) S_n u^n; checks the coefficients against aharonov_direct.
template <class T>
CheckReport bivariate_identity_check(const Jet<T>& f, int N) {
  if (N < 2) throw order_error("need N >= 2");
  if (f.order() < N + 1)
    throw order_error("bivariate check needs jet order >= N+1");
  const AharonovValues<T> sv = aharonov_direct(f, N);
  const Jet<T> d = jet_derive(f).truncated(N);
  const Jet<T> r = jet_reciprocal(jet_tail(f, 1).truncated(N));
  const Jet<T> h = jet_scale(jet_mul(jet_mul(r, r), d), f[1]);
  CheckReport rep;
  detail::absorb_diff(rep, h[0], domain_traits<T>::one());
  detail::absorb_diff(rep, h[1], domain_traits<T>::zero());
  for (int n = 2; n <= N; ++n) {
    const T want = domain_traits<T>::from_int(n - 1) * sv.S(n);
    detail::absorb_diff(rep, h[n], want);
  }
  return rep;
}

// g o f for a Moebius g: (a f + b) / (c f + d) as a jet.
template <class T>
Jet<T> post_moebius(const Jet<T>& f, const Mat2<T>& g) {
  const Jet<T> den = jet_add_scalar(jet_scale(f, g.c), g.d);
  if constexpr (domain_traits<T>::exact) {
    if (domain_traits<T>::is_zero(den.value()))
      throw pole_error("post-composition hits the Moebius pole");
  } else {
    if (domain_traits<T>::magnitude(den.value()) <=
        kSingularFloorRel * den.max_coeff_magnitude())
      throw pole_error("post-composition too close to the Moebius pole");
  }
  const Jet<T> num = jet_add_scalar(jet_scale(f, g.a), g.b);
  return jet_mul(num, jet_reciprocal(den));
}

// f o g at z0 for a Moebius g; f must be expanded at g(z0).
template <class T>
Jet<T> pre_moebius(const Jet<T>& f_at_gz0, const Mat2<T>& g, const T& z0) {
  const Jet<T> inner = local_expansion(g, z0, f_at_gz0.order());
  return jet_compose(f_at_gz0, inner);
}

// Right-hand side of the pre-composition transform law evaluated from
// values at g(z0):
//   n >= 2: S_n[f o g](z0) = sum_{j=0}^{n-2} C(n-2,j) S_{n-j}[f](g z0)
//                            (-c)^j / (c z0 + d)^{2n-j}
//   n == 1: S_1[f o g](z0) = -c/(c z0 + d) + g'(z0) S_1[f](g z0).
template <class T>
T transform_Sn_expected(const AharonovValues<T>& s_at_gz0, const Mat2<T>& g,
                        const T& z0, int n) {
  if (n < 1 || s_at_gz0.max_n() < n)
    throw order_error("transform law needs S_1..S_n at the image point");
  const T den = jfactor(g, z0);
  detail::check_denominator(g, z0, den);
  const T inv = domain_traits<T>::one() / den;
  if (n == 1) {
    const T gp = g.det() * inv * inv;
    return -g.c * inv + gp * s_at_gz0.S(1);
  }
  // inv^{2n-j} = inv^{n+2} * inv^{n-2-j} arranged as a running product.
  T acc = domain_traits<T>::zero();
  T pw = domain_traits<T>::one();
  for (int i = 0; i < 2 * n; ++i) pw = pw * inv;  // inv^{2n}
  T mc = domain_traits<T>::one();
  for (int j = 0; j <= n - 2; ++j) {
    acc += detail::binom_as<T>(n - 2, j) * s_at_gz0.S(n - j) * mc * pw;
    mc = mc * (-g.c);
    pw = pw * den;  // next term needs inv^{2n-(j+1)}
  }
  return acc;
}

// Chain rule for the classical Schwarzian:
//   {f o w} = ({f} o w) (w')^2 + {w}, exact on jets.
template <class T>
CheckReport cocycle_check(const Jet<T>& f_at_w0, const Jet<T>& w) {
  const Jet<T> lhs = schwarzian_classical(jet_compose(f_at_w0, w));
  const Jet<T> sf = schwarzian_classical(f_at_w0);
  const Jet<T> sw = schwarzian_classical(w);
  const Jet<T> wd = jet_derive(w);
  const Jet<T> rhs = jet_add(jet_mul(jet_compose(sf, w), jet_mul(wd, wd)), sw);
  CheckReport rep;
  const int n = std::min(lhs.order(), rhs.order());
  for (int k = 0; k <= n; ++k) detail::absorb_diff(rep, lhs[k], rhs[k]);
  return rep;
}

// Inverse-function law: with z the compositional inverse of w,
//   {z, w} = -{w, z}(dz/dw)^2 composed appropriately; exact on jets.
template <class T>
CheckReport inverse_function_check(const Jet<T>& w) {
  const Jet<T> z = jet_compositional_inverse(w);
  const Jet<T> lhs = schwarzian_classical(z);
  const Jet<T> sw = schwarzian_classical(w);
  const Jet<T> zd = jet_derive(z);
  const Jet<T> rhs = jet_neg(jet_mul(jet_compose(sw, z), jet_mul(zd, zd)));
  CheckReport rep;
  const int n = std::min(lhs.order(), rhs.order());
  for (int k = 0; k <= n; ++k) detail::absorb_diff(rep, lhs[k], rhs[k]);
  return rep;
}

// Independent route to the Schwarzian: solve y'' + R y = 0 for the two
// normalized solutions as jets, set f = y2/y1, and compare {f} with 2R
// through order N.  Power-series recursion, exact over rationals.
template <class T>
CheckReport ode_schwarzian_oracle(const Jet<T>& r_jet, int N) {
  if (N < 0) throw order_error("need N >= 0");
  if (r_jet.order() < N + 1)
    throw order_error("ode oracle needs R to order N+1");
  const int m = N + 3;  // f needs order N+3 so {f} reaches order N
  auto solve = [&](const T& y0, const T& y1) {
    std::vector<T> y(static_cast<std::size_t>(m) + 1,
                     domain_traits<T>::zero());
    y[0] = y0;
    y[1] = y1;
    for (int k = 0; k + 2 <= m; ++k) {
      T acc = domain_traits<T>::zero();
      for (int j = 0; j <= k && j <= r_jet.order(); ++j)
        acc += r_jet[j] * y[static_cast<std::size_t>(k - j)];
      y[static_cast<std::size_t>(k) + 2] =
          -acc / domain_traits<T>::from_int(
                     static_cast<long>(k + 2) * (k + 1));
    }
    return Jet<T>(r_jet.base(), std::move(y));
  };
  const Jet<T> y1 = solve(domain_traits<T>::one(), domain_traits<T>::zero());
  const Jet<T> y2 = solve(domain_traits<T>::zero(), domain_traits<T>::one());
  const Jet<T> f = jet_mul(y2, jet_reciprocal(y1));
  const Jet<T> sf = schwarzian_classical(f);
  CheckReport rep;
  for (int k = 0; k <= N; ++k) {
    const T want = domain_traits<T>::from_int(2) * r_jet[k];
    detail::absorb_diff(rep, sf[k], want);
  }
  return rep;
}

// Riccati form of the generating function: G(w, z) = f'(z)/(f(w)-f(z))
// satisfies dG/dz = G^2 + (f''/f') G at fixed w.  Checked with a central
// difference in z against jets supplied by the provider.
CheckReport riccati_check(const std::function<JetC(Cplx, int)>& f_jet,
                          Cplx z0, Cplx w, double h, int jet_order = 16);

}  // namespace ahs
