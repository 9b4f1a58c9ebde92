#pragma once

#include <map>
#include <string>

#include "ahs/qseries.hpp"

namespace ahs {

// Exact scalar of the form sum_m r_m (2 pi i)^m with rational r_m: a
// rational Laurent polynomial in the symbol 2*pi*i.  Keeping the
// transcendental factor symbolic lets every ring identity below be checked
// by exact arithmetic.
struct PiRat {
  std::map<int, Rat> t;  // exponent -> coefficient, zeros pruned

  PiRat() = default;
  explicit PiRat(long n) { set(0, Rat(n)); }

  static PiRat from_rat(const Rat& r) {
    PiRat p;
    p.set(0, r);
    return p;
  }
  // coef * (2 pi i)^m
  static PiRat two_pi_i(int m, const Rat& coef = Rat(1)) {
    PiRat p;
    p.set(m, coef);
    return p;
  }

  void set(int m, const Rat& r) {
    if (sgn(r) == 0) t.erase(m);
    else t[m] = r;
  }

  bool is_zero() const { return t.empty(); }
  bool operator==(const PiRat& o) const { return t == o.t; }

  PiRat operator+(const PiRat& o) const {
    PiRat r = *this;
    for (const auto& [m, c] : o.t) {
      auto it = r.t.find(m);
      if (it == r.t.end()) r.t[m] = c;
      else {
        it->second += c;
        if (sgn(it->second) == 0) r.t.erase(it);
      }
    }
    return r;
  }
  PiRat operator-() const {
    PiRat r = *this;
    for (auto& [m, c] : r.t) c = -c;
    return r;
  }
  PiRat operator-(const PiRat& o) const { return *this + (-o); }
  PiRat operator*(const PiRat& o) const {
    PiRat r;
    for (const auto& [m1, c1] : t)
      for (const auto& [m2, c2] : o.t) {
        auto it = r.t.find(m1 + m2);
        if (it == r.t.end()) r.t[m1 + m2] = c1 * c2;
        else {
          it->second += c1 * c2;
          if (sgn(it->second) == 0) r.t.erase(it);
        }
      }
    return r;
  }
  PiRat operator*(const Rat& s) const {
    if (sgn(s) == 0) return PiRat();
    PiRat r = *this;
    for (auto& [m, c] : r.t) c = c * s;
    return r;
  }

  Cplx to_complex() const;
  std::string str() const;
};

template <>
struct coeff_ops<PiRat> {
  static PiRat zero() { return PiRat(); }
  static PiRat from_long(long n) { return PiRat(n); }
  static bool is_zero(const PiRat& c) { return c.is_zero(); }
};

using PiSeries = PowerSeries<PiRat>;

// Monomial e2^a e4^b e6^c in the graded polynomial model of quasimodular
// forms on the full modular group.
struct Mono {
  int a2 = 0, a4 = 0, a6 = 0;
  int weight() const { return 2 * a2 + 4 * a4 + 6 * a6; }
  auto operator<=>(const Mono&) const = default;
};

// Polynomial in e2, e4, e6 over PiRat scalars.  weight grades by
// 2 a2 + 4 a4 + 6 a6; depth is the e2-degree.
class GradedPoly {
 public:
  GradedPoly() = default;

  static GradedPoly zero() { return {}; }
  static GradedPoly one() { return monomial({0, 0, 0}, PiRat(1)); }
  static GradedPoly e2() { return monomial({1, 0, 0}, PiRat(1)); }
  static GradedPoly e4() { return monomial({0, 1, 0}, PiRat(1)); }
  static GradedPoly e6() { return monomial({0, 0, 1}, PiRat(1)); }
  static GradedPoly monomial(Mono m, PiRat c);

  const std::map<Mono, PiRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const GradedPoly& o) const { return terms_ == o.terms_; }

  GradedPoly operator+(const GradedPoly& o) const;
  GradedPoly operator-(const GradedPoly& o) const;
  GradedPoly operator*(const GradedPoly& o) const;
  GradedPoly scale(const PiRat& s) const;

  bool is_homogeneous() const;
  std::string str() const;

 private:
  void add_term(Mono m, const PiRat& c);
  std::map<Mono, PiRat> terms_;
};

// Weight of a nonzero homogeneous polynomial; throws otherwise.
int graded_weight(const GradedPoly& p);

// Largest e2-exponent appearing (0 for the zero polynomial).
int graded_depth(const GradedPoly& p);

// q-expansion with exact PiRat coefficients, substituting the Eisenstein
// series for the generators.
PiSeries graded_qexp(const GradedPoly& p, int order);

// Serre derivative-free differential structure:
//   D = (2 pi i)^{-1} d/dz on q-expansions equals q d/dq; on the ring it
//   acts through the Ramanujan identities, here carried with the 2 pi i
//   factor attached so D matches d/dz itself:
//   D e2 = (2 pi i)(e2^2 - e4)/12, D e4 = (2 pi i)(e2 e4 - e6)/3,
//   D e6 = (2 pi i)(e2 e6 - e4^2)/2.
GradedPoly D_op(const GradedPoly& p);

// delta = kappa * d/de2 with the exact constant kappa = 12 (2 pi i)^{-1};
// lowers depth by one and weight by two.
GradedPoly delta_op(const GradedPoly& p);

// Weight grading operator: multiplies each homogeneous piece by its weight.
GradedPoly E_op(const GradedPoly& p);

// The exact ring constant behind delta_op; its numeric value is certified
// against the fitted transformation constant at startup of the floating
// layer.
PiRat kappa_exact();

struct Sl2Report {
  bool ok = true;
  long monomials = 0;
  std::string first_failure;
};

// Exhaustive check of the operator relations on every monomial of weight
// <= max_weight:
//   E D - D E = 2 D,  E delta - delta E = -2 delta,  delta D - D delta = E,
// plus weight bookkeeping of D and delta and the q-expansion validation
// of D (ring image vs (2 pi i) q d/dq of the expansion).
Sl2Report sl2_commutator_check(int max_weight, int qexp_order = 12);

}  // namespace ahs
