#include "ahs/graded.hpp"

#include <sstream>

#include "ahs/eisenstein.hpp"

namespace ahs {

Cplx PiRat::to_complex() const {
  const Cplx base(0.0, 2.0 * kPi);
  Cplx total(0.0, 0.0);
  for (const auto& [m, c] : t) {
    Cplx p(1.0, 0.0);
    for (int i = 0; i < (m >= 0 ? m : -m); ++i) p *= base;
    if (m < 0) p = Cplx(1.0, 0.0) / p;
    total += c.get_d() * p;
  }
  return total;
}

std::string PiRat::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (m != 0) os << "*(2pi i)^" << m;
  }
  return os.str();
}

GradedPoly GradedPoly::monomial(Mono m, PiRat c) {
  GradedPoly p;
  p.add_term(m, c);
  return p;
}

void GradedPoly::add_term(Mono m, const PiRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
  GradedPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
  GradedPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
  GradedPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      r.add_term({m1.a2 + m2.a2, m1.a4 + m2.a4, m1.a6 + m2.a6}, c1 * c2);
  return r;
}

GradedPoly GradedPoly::scale(const PiRat& s) const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

bool GradedPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_)
    if (m.weight() != w) return false;
  return true;
}

std::string GradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (m.a2) os << " e2^" << m.a2;
    if (m.a4) os << " e4^" << m.a4;
    if (m.a6) os << " e6^" << m.a6;
  }
  return os.str();
}

int graded_weight(const GradedPoly& p) {
  if (p.is_zero()) throw math_error("weight of the zero polynomial");
  if (!p.is_homogeneous()) throw math_error("weight of a mixed polynomial");
  return p.terms().begin()->first.weight();
}

int graded_depth(const GradedPoly& p) {
  int d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.a2);
  return d;
}

namespace {

PowerSeries<Rat> q_pow(const QSeries& base, int e, int order) {
  QSeries r = QSeries::zeros(order);
  r.a[0] = 1;
  for (int i = 0; i < e; ++i) r = ps_mul(r, base);
  return r;
}

}  // namespace

PiSeries graded_qexp(const GradedPoly& p, int order) {
  const QSeries s2 = eisenstein_q(EisForm::E2, order);
  const QSeries s4 = eisenstein_q(EisForm::E4, order);
  const QSeries s6 = eisenstein_q(EisForm::E6, order);
  PiSeries out = PiSeries::zeros(order);
  for (const auto& [m, c] : p.terms()) {
    const QSeries prod =
        ps_mul(ps_mul(q_pow(s2, m.a2, order), q_pow(s4, m.a4, order)),
               q_pow(s6, m.a6, order));
    for (int n = 0; n <= order; ++n)
      out.a[n] = out.a[n] + c * prod.a[n];
  }
  return out;
}

namespace {

const GradedPoly& d_image_e2() {
  static const GradedPoly img =
      (GradedPoly::e2() * GradedPoly::e2() - GradedPoly::e4())
          .scale(PiRat::two_pi_i(1, rat(1, 12)));
  return img;
}
const GradedPoly& d_image_e4() {
  static const GradedPoly img =
      (GradedPoly::e2() * GradedPoly::e4() - GradedPoly::e6())
          .scale(PiRat::two_pi_i(1, rat(1, 3)));
  return img;
}
const GradedPoly& d_image_e6() {
  static const GradedPoly img =
      (GradedPoly::e2() * GradedPoly::e6() -
       GradedPoly::e4() * GradedPoly::e4())
          .scale(PiRat::two_pi_i(1, rat(1, 2)));
  return img;
}

GradedPoly mono_poly(const Mono& m, const PiRat& c) {
  return GradedPoly::monomial(m, c);
}

}  // namespace

GradedPoly D_op(const GradedPoly& p) {
  GradedPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.a2 > 0) {
      const Mono lowered{m.a2 - 1, m.a4, m.a6};
      r = r + (d_image_e2() * mono_poly(lowered, c * Rat(m.a2)));
    }
    if (m.a4 > 0) {
      const Mono lowered{m.a2, m.a4 - 1, m.a6};
      r = r + (d_image_e4() * mono_poly(lowered, c * Rat(m.a4)));
    }
    if (m.a6 > 0) {
      const Mono lowered{m.a2, m.a4, m.a6 - 1};
      r = r + (d_image_e6() * mono_poly(lowered, c * Rat(m.a6)));
    }
  }
  return r;
}

PiRat kappa_exact() { return PiRat::two_pi_i(-1, Rat(12)); }

GradedPoly delta_op(const GradedPoly& p) {
  GradedPoly r;
  const PiRat k = kappa_exact();
  for (const auto& [m, c] : p.terms()) {
    if (m.a2 == 0) continue;
    r = r + mono_poly({m.a2 - 1, m.a4, m.a6}, c * Rat(m.a2) * k);
  }
  return r;
}

GradedPoly E_op(const GradedPoly& p) {
  GradedPoly r;
  for (const auto& [m, c] : p.terms())
    r = r + mono_poly(m, c * Rat(m.weight()));
  return r;
}

namespace {

bool ps_pirat_eq(const PiSeries& x, const PiSeries& y) {
  const int n = std::min(x.order(), y.order());
  for (int k = 0; k <= n; ++k)
    if (!(x.a[k] == y.a[k])) return false;
  return true;
}

}  // namespace

Sl2Report sl2_commutator_check(int max_weight, int qexp_order) {
  Sl2Report rep;
  auto fail = [&rep](const std::string& what) {
    if (rep.ok) rep.first_failure = what;
    rep.ok = false;
  };
  for (int a6 = 0; 6 * a6 <= max_weight; ++a6)
    for (int a4 = 0; 6 * a6 + 4 * a4 <= max_weight; ++a4)
      for (int a2 = 0; 6 * a6 + 4 * a4 + 2 * a2 <= max_weight; ++a2) {
        const Mono m{a2, a4, a6};
        const GradedPoly p = GradedPoly::monomial(m, PiRat(1));
        rep.monomials += 1;
        const GradedPoly dp = D_op(p);
        const GradedPoly del = delta_op(p);
        // Weight bookkeeping: D raises by 2, delta lowers by 2.
        if (!dp.is_zero() && graded_weight(dp) != m.weight() + 2)
          fail("D weight grading at " + p.str());
        if (!del.is_zero() && graded_weight(del) != m.weight() - 2)
          fail("delta weight grading at " + p.str());
        if (graded_depth(dp) > m.a2 + 1)
          fail("D depth bound at " + p.str());
        // E D - D E = 2 D
        if (!(E_op(dp) - D_op(E_op(p)) == dp + dp))
          fail("[E,D] = 2D at " + p.str());
        // E delta - delta E = -2 delta
        if (!(E_op(del) - delta_op(E_op(p)) == GradedPoly::zero() - (del + del)))
          fail("[E,delta] = -2delta at " + p.str());
        // delta D - D delta = E
        if (!(delta_op(dp) - D_op(del) == E_op(p)))
          fail("[delta,D] = E at " + p.str());
        // q-expansion route for D: (2 pi i) q d/dq of the expansion.
        const PiSeries lhs = graded_qexp(dp, qexp_order);
        const PiSeries rhs =
            ps_scale(ps_theta(graded_qexp(p, qexp_order)), PiRat::two_pi_i(1));
        if (!ps_pirat_eq(lhs, rhs)) fail("D vs q-expansion at " + p.str());
      }
  return rep;
}

}  // namespace ahs
