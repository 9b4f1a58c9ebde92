#include <cmath>
#include <vector>

#include "doctest.h"

#include "ahs/equivariant.hpp"
#include "ahs/eval.hpp"
#include "ahs/moebius.hpp"
#include "ahs/quasimodular.hpp"
#include "ahs/rng.hpp"

using namespace ahs;

namespace {

const std::vector<IMat> kWords = {
    {0, -1, 1, 0},   // S
    {1, 1, 1, 2},    // T S T ~ conjugate, c != 0
    {2, 1, 1, 1},
    {3, -1, 1, 0},
};

std::vector<Cplx> fit_points() {
  // Eight points, generic real parts, heights in [1, 2].
  return {Cplx(0.13, 1.21), Cplx(-0.27, 1.44),  Cplx(0.52, 1.09),
          Cplx(-0.61, 1.8), Cplx(0.033, 1.57),  Cplx(0.71, 1.33),
          Cplx(-0.15, 1.9), Cplx(0.29, 1.02)};
}

std::vector<GZSample> samples_for(const std::vector<IMat>& gs,
                                  const std::vector<Cplx>& zs) {
  std::vector<GZSample> out;
  for (const IMat& g : gs)
    for (const Cplx& z : zs) out.push_back({g, z});
  return out;
}

}  // namespace

TEST_CASE("chordal distance is bounded and symmetric") {
  CHECK(chordal(Cplx(0, 0), Cplx(0, 0)) == 0.0);
  const Cplx a(1.5, -0.25), b(-3.0, 4.0);
  CHECK(chordal(a, b) == doctest::Approx(chordal(b, a)));
  CHECK(chordal(a, b) <= 1.0);
  const Cplx huge(1e160, 0.0);
  CHECK(chordal(huge, huge) == doctest::Approx(0.0));
  CHECK(chordal(Cplx(0, 0), huge) <= 1.0);
}

TEST_CASE("the rational map of a weight-k form is equivariant for rho = g") {
  const auto e4 = FormEvaluator::eisenstein(EisForm::E4, 64);
  const EquivariantFn h = rational_equivariant(e4, 4, 1e-11);
  const auto pts = fit_points();
  for (const IMat& g : kWords) {
    const CheckReport r = equivariance_check(h, g, to_cmat(g), pts);
    CHECK(r.max_rel <= 1e-7);
  }
}

TEST_CASE("representation fitting recovers the group element projectively") {
  const auto e6 = FormEvaluator::eisenstein(EisForm::E6, 64);
  const EquivariantFn h = rational_equivariant(e6, 6, 1e-11);
  const auto pts = fit_points();
  for (const IMat& g : kWords) {
    const RepFit fit = fit_representation(h, g, pts);
    CHECK_FALSE(fit.degenerate);
    CHECK(fit.validation_max <= 1e-7);
    CHECK(projective_deviation(fit.rho, to_cmat(g)) <= 1e-6);
  }
}

TEST_CASE("fitted representations compose like the group") {
  const auto e4 = FormEvaluator::eisenstein(EisForm::E4, 64);
  const EquivariantFn h = rational_equivariant(e4, 4, 1e-11);
  Rng rng = case_rng(11, "equivariant/homomorphism", 0);
  std::vector<GroupWord> words;
  while (words.size() < 6) {
    GroupWord w = random_word(rng, 6);
    if (w.letters.size() >= 2) words.push_back(w);
  }
  const HomomorphismReport hr = homomorphism_check(h, words, fit_points());
  CHECK_FALSE(hr.degenerate);
  CHECK(hr.words == 6);
  CHECK(hr.max_deviation <= 1e-6);
}

TEST_CASE("the main equivalence holds for a cusp form map") {
  const auto e4 = FormEvaluator::eisenstein(EisForm::E4, 64);
  const auto e6 = FormEvaluator::eisenstein(EisForm::E6, 64);
  const EquivariantFn h = rational_equivariant_disc(e4, e6, 1e-11);
  const auto samples = samples_for(
      kWords, {Cplx(0.11, 1.31), Cplx(-0.23, 1.52), Cplx(0.41, 1.18)});
  MainVerifyConfig cfg;
  cfg.n_lo = 2;
  cfg.n_hi = 5;
  cfg.tol = 1e-7;
  const MainTheoremReport r = main_theorem_verify(h, samples, cfg);
  CHECK(r.verdict == "PASS");
  CHECK(r.cases > 0);
  CHECK(r.s_scale > 1e-6);
  for (const auto& [n, res] : r.per_n) CHECK(res <= cfg.tol);
}

TEST_CASE("a non-equivariant map fails at the first level") {
  const EquivariantFn h = exp_map();
  const auto samples = samples_for(
      kWords, {Cplx(0.09, 1.27), Cplx(-0.31, 1.63)});
  MainVerifyConfig cfg;
  cfg.n_lo = 2;
  cfg.n_hi = 2;
  const MainTheoremReport r = main_theorem_verify(h, samples, cfg);
  CHECK(r.verdict == "FAIL");
  CHECK(r.per_n.at(2) >= 1e-2);
}

TEST_CASE("a Moebius map is flagged degenerate, not passing") {
  const IMat g{1, 1, 1, 2};
  const EquivariantFn h = moebius_map_fn(g);
  const auto samples = samples_for(
      kWords, {Cplx(0.17, 1.4), Cplx(-0.08, 1.1)});
  MainVerifyConfig cfg;
  const MainTheoremReport r = main_theorem_verify(h, samples, cfg);
  CHECK(r.verdict == "DEGENERATE");
  CHECK(r.s_scale <= cfg.degenerate_floor);
}

TEST_CASE("witness level and full range agree in both directions") {
  const auto e4 = FormEvaluator::eisenstein(EisForm::E4, 64);
  const EquivariantFn good = rational_equivariant(e4, 4, 1e-11);
  const auto samples = samples_for(
      {kWords[0], kWords[2]}, {Cplx(0.21, 1.35), Cplx(-0.19, 1.58)});
  MainVerifyConfig cfg;
  cfg.n_lo = 2;
  cfg.n_hi = 6;

  const ConverseReport pos = converse_check(good, 4, samples, cfg);
  CHECK(pos.witness_pass);
  CHECK(pos.full.verdict == "PASS");
  CHECK(pos.consistent);

  const ConverseReport neg = converse_check(exp_map(), 2, samples, cfg);
  CHECK_FALSE(neg.witness_pass);
  CHECK(neg.full.verdict == "FAIL");
  CHECK(neg.consistent);
}
