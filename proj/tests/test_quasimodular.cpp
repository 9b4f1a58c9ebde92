#include <cmath>
#include <memory>
#include <vector>

#include "doctest.h"

#include "ahs/domain.hpp"
#include "ahs/eval.hpp"
#include "ahs/graded.hpp"
#include "ahs/moebius.hpp"
#include "ahs/quasimodular.hpp"

using namespace ahs;

namespace {

// det-1 integer matrices with pairwise distinct c:d ratios, all c != 0.
const std::vector<IMat> kMats = {
    {0, -1, 1, 0},
    {1, 0, 1, 1},
    {3, 1, 2, 1},
    {2, -1, 3, -1},
};

const std::vector<Cplx> kPoints = {
    Cplx(0.31, 1.17),
    Cplx(-0.42, 0.93),
    Cplx(0.05, 1.61),
};

std::vector<GZSample> all_samples() {
  std::vector<GZSample> out;
  for (const IMat& g : kMats)
    for (const Cplx& z : kPoints) out.push_back({g, z});
  return out;
}

}  // namespace

TEST_CASE("adopted constants are certified against the exact ring constant") {
  const FittedConstants& fc = adopted_constants();
  CHECK(std::abs(fc.kappa - kappa_exact().to_complex()) <= 1e-8);
  CHECK(fc.kappa_dispersion <= 1e-8);
  CHECK(std::abs(fc.lambda - Cplx(0.0, 2.0 * kPi)) <= 1e-6);
  CHECK(fc.lambda_residual <= 1e-8);
}

TEST_CASE("weight-k forms satisfy the depth-zero transformation law") {
  for (EisForm which : {EisForm::E4, EisForm::E6}) {
    const auto ev = FormEvaluator::eisenstein(which, 64);
    const QMComponents f = qm_eis(which, ev, 1e-11);
    CHECK(f.depth == 0);
    for (const GZSample& s : all_samples())
      CHECK(qm_transform_check(f, s.g, s.z) <= 1e-8);
  }
}

TEST_CASE("the weight-2 series transforms with the fitted constant") {
  const auto e2 = FormEvaluator::eisenstein(EisForm::E2, 64);
  const QMComponents f = qm_e2(e2, adopted_constants().kappa, 1e-11);
  CHECK(f.weight == 2);
  CHECK(f.depth == 1);
  for (const GZSample& s : all_samples()) {
    CHECK(qm_transform_check(f, s.g, s.z) <= 1e-8);
    CHECK(component_transform_check(f, 0, s.g, s.z) <= 1e-8);
    CHECK(component_transform_check(f, 1, s.g, s.z) <= 1e-8);
  }
}

TEST_CASE("squaring doubles the weight and the depth") {
  const auto e2 = FormEvaluator::eisenstein(EisForm::E2, 64);
  const QMComponents f = qm_e2_squared(e2, adopted_constants().kappa, 1e-11);
  CHECK(f.weight == 4);
  CHECK(f.depth == 2);
  for (const GZSample& s : all_samples()) {
    CHECK(qm_transform_check(f, s.g, s.z) <= 1e-8);
    for (int r = 0; r <= 2; ++r)
      CHECK(component_transform_check(f, r, s.g, s.z) <= 1e-7);
  }
}

TEST_CASE("constant fitting recovers the exact value from samples") {
  const auto e2 = FormEvaluator::eisenstein(EisForm::E2, 64);
  const KappaFit fit = fit_e2_constant(all_samples(), *e2, 1e-11);
  CHECK(fit.samples == static_cast<int>(kMats.size() * kPoints.size()));
  CHECK(std::abs(fit.kappa - kappa_exact().to_complex()) <= 1e-9);
  CHECK(fit.dispersion <= 1e-8);
}

TEST_CASE("near-holomorphic completion transforms with weight k") {
  const auto e2 = FormEvaluator::eisenstein(EisForm::E2, 64);
  const QMComponents f = qm_e2(e2, adopted_constants().kappa, 1e-11);
  const Cplx lambda(0.0, 2.0 * kPi);
  for (const GZSample& s : all_samples())
    CHECK(near_holomorphic_check(f, lambda, s.g, s.z) <= 1e-8);

  const LambdaFit lf = fit_lambda(f, all_samples());
  CHECK(std::abs(lf.lambda - lambda) <= 1e-7);
  CHECK(lf.residual_max <= 1e-8);
}

TEST_CASE("component extraction inverts the transformation law") {
  const auto e2 = FormEvaluator::eisenstein(EisForm::E2, 64);
  const QMComponents f = qm_e2_squared(e2, adopted_constants().kappa, 1e-11);
  const std::vector<IMat> gs(kMats.begin(), kMats.begin() + 3);
  for (const Cplx& z : kPoints) {
    const auto rec = extract_components(f.comp[0], f.weight, f.depth, z, gs);
    REQUIRE(rec.size() == 3);
    for (int r = 0; r <= 2; ++r)
      CHECK(std::abs(rec[static_cast<std::size_t>(r)] - f.comp[static_cast<std::size_t>(r)](z)) <= 1e-6);
  }
}

TEST_CASE("cusp form values agree across two evaluation routes") {
  // Frozen reference for the discriminant at i, and consistency with the
  // weight-4/weight-6 route through (E4^3 - E6^2)/1728.
  const auto disc = FormEvaluator::discriminant(64);
  const Cplx i(0.0, 1.0);
  const Cplx di = disc->value(i, 1e-12).value;
  CHECK(std::abs(di - Cplx(0.0017853698506421519, 0.0)) < 1e-14);

  const auto e4 = FormEvaluator::eisenstein(EisForm::E4, 64);
  const auto e6 = FormEvaluator::eisenstein(EisForm::E6, 64);
  const Cplx z(0.37, 1.23);
  const Cplx a = e4->value(z, 1e-12).value;
  const Cplx b = e6->value(z, 1e-12).value;
  const Cplx route = (a * a * a - b * b) / 1728.0;
  const Cplx dz = disc->value(z, 1e-12).value;
  CHECK(std::abs(dz - route) <= 1e-10 * std::abs(route));
}
