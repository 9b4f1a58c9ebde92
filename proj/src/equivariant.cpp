#include "ahs/equivariant.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace ahs {

namespace {

Cplx cpow_int(Cplx b, int e) {
  Cplx r(1.0, 0.0);
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
  return e >= 0 ? r : Cplx(1.0, 0.0) / r;
}

EquivariantFn from_jet_provider(std::string label,
                                std::function<JetC(Cplx, int)> form_jet,
                                int weight) {
  EquivariantFn h;
  h.label = std::move(label);
  auto jet_at = [form_jet = std::move(form_jet), weight](Cplx z, int order) {
    if (order < 1) throw order_error("equivariant jet needs order >= 1");
    const JetC fj = form_jet(z, order + 1);
    const JetC fd = jet_derive(fj);
    const JetC ratio = jet_mul(fj.truncated(order), jet_reciprocal(fd));
    return jet_add(JetC::variable(z, order, z),
                   jet_scale(ratio, Cplx(static_cast<double>(weight), 0.0)));
  };
  h.jet_at = jet_at;
  h.value = [jet_at](Cplx z) { return jet_at(z, 1).value(); };
  return h;
}

}  // namespace

EquivariantFn rational_equivariant(std::shared_ptr<FormEvaluator> f,
                                   int weight, double tol_eval) {
  return from_jet_provider(
      "h[" + f->label() + "]",
      [f, tol_eval](Cplx z, int order) { return f->jet(z, order, tol_eval); },
      weight);
}

EquivariantFn rational_equivariant(const QSeries& f_q, int weight,
                                   double tol_eval) {
  return from_jet_provider(
      "h[qseries]",
      [f_q, tol_eval](Cplx z, int order) {
        return jet_from_qseries(f_q, z, order, tol_eval);
      },
      weight);
}

EquivariantFn rational_equivariant_disc(std::shared_ptr<FormEvaluator> e4,
                                        std::shared_ptr<FormEvaluator> e6,
                                        double tol_eval) {
  return from_jet_provider(
      "h[delta]",
      [e4, e6, tol_eval](Cplx z, int order) {
        const JetC j4 = e4->jet(z, order, tol_eval);
        const JetC j6 = e6->jet(z, order, tol_eval);
        const JetC cu = jet_mul(jet_mul(j4, j4), j4);
        const JetC sq = jet_mul(j6, j6);
        return jet_scale(jet_sub(cu, sq), Cplx(1.0 / 1728.0, 0.0));
      },
      12);
}

EquivariantFn rational_equivariant_named(const std::string& name,
                                         std::size_t base_order,
                                         double tol_eval) {
  if (name == "E4")
    return rational_equivariant(FormEvaluator::eisenstein(EisForm::E4, base_order),
                                4, tol_eval);
  if (name == "E6")
    return rational_equivariant(FormEvaluator::eisenstein(EisForm::E6, base_order),
                                6, tol_eval);
  if (name == "disc")
    return rational_equivariant_disc(
        FormEvaluator::eisenstein(EisForm::E4, base_order),
        FormEvaluator::eisenstein(EisForm::E6, base_order), tol_eval);
  throw math_error("unknown rational equivariant '" + name + "'");
}

EquivariantFn exp_map() {
  EquivariantFn h;
  h.label = "exp";
  h.value = [](Cplx z) { return std::exp(z); };
  h.jet_at = [](Cplx z, int order) {
    std::vector<Cplx> c(static_cast<std::size_t>(order) + 1);
    const Cplx e = std::exp(z);
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
      if (k > 0) fact *= static_cast<double>(k);
      c[static_cast<std::size_t>(k)] = e / fact;
    }
    return JetC(z, std::move(c));
  };
  return h;
}

EquivariantFn moebius_map_fn(const IMat& g) {
  EquivariantFn h;
  h.label = "moebius";
  const MoebiusMap gc = to_cmat(g);
  h.value = [gc](Cplx z) { return act_point(gc, z); };
  h.jet_at = [gc](Cplx z, int order) { return local_expansion(gc, z, order); };
  return h;
}

double chordal(Cplx a, Cplx b) {
  const bool fa = std::isfinite(a.real()) && std::isfinite(a.imag());
  const bool fb = std::isfinite(b.real()) && std::isfinite(b.imag());
  const double ma = fa ? std::abs(a) : 0.0;
  const double mb = fb ? std::abs(b) : 0.0;
  if (!fa || ma > 1e100) {
    if (!fb || mb > 1e100) return 0.0;
    return 1.0 / std::sqrt(1.0 + mb * mb);
  }
  if (!fb || mb > 1e100) return 1.0 / std::sqrt(1.0 + ma * ma);
  return std::abs(a - b) /
         std::sqrt((1.0 + ma * ma) * (1.0 + mb * mb));
}

CheckReport equivariance_check(const EquivariantFn& h, const IMat& g,
                               const MoebiusMap& rho_g,
                               const std::vector<Cplx>& points) {
  const MoebiusMap gc = to_cmat(g);
  CheckReport rep;
  for (const Cplx& z : points) {
    const Cplx lhs = h.value(act_point(gc, z));
    const Cplx rhs = act_point(rho_g, h.value(z));
    const double d = chordal(lhs, rhs);
    rep.max_abs = std::max(rep.max_abs, d);
    rep.max_rel = std::max(rep.max_rel, d);
    rep.cases += 1;
  }
  return rep;
}

namespace {

MoebiusMap det_normalize(const MoebiusMap& m, bool* ok = nullptr) {
  const Cplx det = m.a * m.d - m.b * m.c;
  const double scale =
      std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
  if (ok) *ok = std::abs(det) > 1e-12 * scale * scale;
  const Cplx s = std::sqrt(det);
  MoebiusMap r{m.a / s, m.b / s, m.c / s, m.d / s};
  // Sign convention: the first entry above the noise floor gets its
  // argument into [0, pi).
  const Cplx entries[4] = {r.a, r.b, r.c, r.d};
  const double norm =
      std::max({std::abs(r.a), std::abs(r.b), std::abs(r.c), std::abs(r.d)});
  for (const Cplx& e : entries) {
    if (std::abs(e) <= 1e-8 * norm) continue;
    const double arg = std::arg(e);
    if (!(arg >= 0.0 && arg < kPi)) {
      r = {-r.a, -r.b, -r.c, -r.d};
    }
    break;
  }
  return r;
}

double entry_norm(const MoebiusMap& m) {
  return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

}  // namespace

double projective_deviation(const MoebiusMap& a, const MoebiusMap& b) {
  const MoebiusMap an = det_normalize(a);
  const MoebiusMap bn = det_normalize(b);
  const double scale = std::max(entry_norm(bn), 1e-300);
  const auto dist = [&](double sgn) {
    return std::max({std::abs(an.a - sgn * bn.a), std::abs(an.b - sgn * bn.b),
                     std::abs(an.c - sgn * bn.c),
                     std::abs(an.d - sgn * bn.d)});
  };
  return std::min(dist(1.0), dist(-1.0)) / scale;
}

RepFit fit_representation(const EquivariantFn& h, const IMat& g,
                          const std::vector<Cplx>& points) {
  if (points.size() < 6)
    throw math_error("representation fit needs >= 6 points (4 + validation)");
  const MoebiusMap gc = to_cmat(g);
  const std::size_t n_fit = points.size() - 2;
  Eigen::MatrixXcd a(n_fit, 4);
  for (std::size_t i = 0; i < n_fit; ++i) {
    const Cplx x = h.value(points[i]);
    const Cplx y = h.value(act_point(gc, points[i]));
    a(static_cast<Eigen::Index>(i), 0) = x;
    a(static_cast<Eigen::Index>(i), 1) = Cplx(1.0, 0.0);
    a(static_cast<Eigen::Index>(i), 2) = -x * y;
    a(static_cast<Eigen::Index>(i), 3) = -y;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Eigen::Vector4cd v = svd.matrixV().col(3);
  RepFit fit;
  const double s0 = sv(0);
  fit.fit_residual = s0 > 0.0 ? sv(3) / s0 : 0.0;
  // A second near-zero singular value means the data does not pin down a
  // unique map (h collapses points); flag instead of trusting the vector.
  if (s0 <= 0.0 || sv(2) <= 1e-10 * s0) fit.degenerate = true;
  MoebiusMap raw{v(0), v(1), v(2), v(3)};
  bool det_ok = false;
  fit.rho = det_normalize(raw, &det_ok);
  if (!det_ok) fit.degenerate = true;
  for (std::size_t i = n_fit; i < points.size(); ++i) {
    const Cplx lhs = h.value(act_point(gc, points[i]));
    const Cplx rhs = act_point(fit.rho, h.value(points[i]));
    fit.validation_max = std::max(fit.validation_max, chordal(lhs, rhs));
  }
  return fit;
}

HomomorphismReport homomorphism_check(const EquivariantFn& h,
                                      const std::vector<GroupWord>& words,
                                      const std::vector<Cplx>& points) {
  HomomorphismReport rep;
  for (const GroupWord& w : words) {
    if (w.letters.size() < 2)
      throw math_error("homomorphism check needs words of length >= 2");
    const std::size_t half = w.letters.size() / 2;
    GroupWord u, v;
    u.letters.assign(w.letters.begin(), w.letters.begin() + half);
    v.letters.assign(w.letters.begin() + half, w.letters.end());
    const RepFit fw = fit_representation(h, word_to_matrix(w), points);
    const RepFit fu = fit_representation(h, word_to_matrix(u), points);
    const RepFit fv = fit_representation(h, word_to_matrix(v), points);
    rep.degenerate = rep.degenerate || fw.degenerate || fu.degenerate ||
                     fv.degenerate;
    const MoebiusMap prod = fu.rho * fv.rho;
    rep.max_deviation =
        std::max(rep.max_deviation, projective_deviation(prod, fw.rho));
    rep.words += 1;
  }
  return rep;
}

namespace {

double rel_residual(Cplx got, Cplx want, double term_scale) {
  const double denom = std::max(
      {std::abs(got), std::abs(want), 1e-6 * term_scale, 1e-300});
  return std::abs(got - want) / denom;
}

}  // namespace

MainTheoremReport main_theorem_verify(const EquivariantFn& h,
                                      const std::vector<GZSample>& samples,
                                      const MainVerifyConfig& cfg) {
  if (cfg.n_lo < 2 || cfg.n_hi < cfg.n_lo)
    throw math_error("main theorem range needs 2 <= n_lo <= n_hi");
  MainTheoremReport rep;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) rep.per_n[n] = 0.0;
  for (const GZSample& s : samples) {
    const MoebiusMap gc = to_cmat(s.g);
    const Cplx gz = act_point(gc, s.z);
    const JetC jz = h.jet_at(s.z, cfg.n_hi + 1);
    const JetC jgz = h.jet_at(gz, cfg.n_hi + 1);
    const AharonovValues<Cplx> sz = aharonov_direct(jz, cfg.n_hi);
    const AharonovValues<Cplx> sgz = aharonov_direct(jgz, cfg.n_hi);
    const Cplx jf = jfactor(gc, s.z);
    const Cplx x = Cplx(static_cast<double>(s.g.c), 0.0) / jf;
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
      rep.s_scale = std::max({rep.s_scale, std::abs(sz.S(n)),
                              std::abs(sgz.S(n))});
      const Cplx lhs = sgz.S(n) * cpow_int(jf, -2 * n);
      Cplx rhs(0.0, 0.0);
      double terms = 0.0;
      Cplx xp(1.0, 0.0);
      for (int j = 0; j <= n - 2; ++j) {
        const Cplx term =
            Cplx(static_cast<double>(detail::ll_binom(n - 2, j)), 0.0) *
            sz.S(n - j) * xp;
        rhs += term;
        terms += std::abs(term);
        xp *= x;
      }
      rep.per_n[n] = std::max(rep.per_n[n], rel_residual(lhs, rhs, terms));
      // Component form of the same law at depths r >= 1: the components
      // of S_n are f_r = C(n-2, r) S_{n-r}.
      for (int r = 1; r <= n - 2; ++r) {
        const Cplx lhs_r =
            cpow_int(jf, -2 * n + 2 * r) *
            Cplx(static_cast<double>(detail::ll_binom(n - 2, r)), 0.0) *
            sgz.S(n - r);
        Cplx rhs_r(0.0, 0.0);
        double terms_r = 0.0;
        Cplx xpr(1.0, 0.0);
        for (int j = 0; r + j <= n - 2; ++j) {
          const Cplx term =
              Cplx(static_cast<double>(detail::ll_binom(r + j, j)), 0.0) *
              Cplx(static_cast<double>(detail::ll_binom(n - 2, r + j)), 0.0) *
              sz.S(n - r - j) * xpr;
          rhs_r += term;
          terms_r += std::abs(term);
          xpr *= x;
        }
        rep.component_residual_max =
            std::max(rep.component_residual_max,
                     rel_residual(lhs_r, rhs_r, terms_r));
      }
    }
    rep.cases += 1;
  }
  if (rep.s_scale <= cfg.degenerate_floor) {
    rep.verdict = "DEGENERATE";
    return rep;
  }
  double worst = rep.component_residual_max;
  for (const auto& [n, r] : rep.per_n) worst = std::max(worst, r);
  rep.verdict = worst <= cfg.tol ? "PASS" : "FAIL";
  return rep;
}

ConverseReport converse_check(const EquivariantFn& h, int n_witness,
                              const std::vector<GZSample>& samples,
                              MainVerifyConfig cfg) {
  ConverseReport rep;
  MainVerifyConfig wit = cfg;
  wit.n_lo = wit.n_hi = n_witness;
  const MainTheoremReport w = main_theorem_verify(h, samples, wit);
  rep.witness_pass = w.verdict == "PASS";
  rep.full = main_theorem_verify(h, samples, cfg);
  const bool full_pass = rep.full.verdict == "PASS";
  rep.consistent = (rep.witness_pass == full_pass);
  return rep;
}

}  // namespace ahs
