#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "ahs/eval.hpp"
#include "ahs/moebius.hpp"
#include "ahs/schwarzian.hpp"

namespace ahs {

// Depth-graded transformation data of a quasimodular form f of weight k:
//   f(gz) = (cz+d)^k * sum_{r=0}^{depth} comp[r](z) * (c/(cz+d))^r
// comp[0] is f itself; the top component must not vanish identically.
struct QMComponents {
  std::string label;
  int weight = 0;
  int depth = 0;
  std::vector<std::function<Cplx(Cplx)>> comp;
};

// One transformation sample: an integer group element and a base point.
struct GZSample {
  IMat g;
  Cplx z;
};

// Relative residual of the component transformation law at one sample.
double qm_transform_check(const QMComponents& f, const IMat& g, Cplx z);

// Residual of the r-th component's own law:
//   (cz+d)^{-k+2r} f_r(gz) = sum_{j=0}^{depth-r} C(r+j, j) f_{r+j}(z) X^j.
double component_transform_check(const QMComponents& f, int r, const IMat& g,
                                 Cplx z);

struct KappaFit {
  Cplx kappa{0.0, 0.0};
  double dispersion = 0.0;  // max distance of a sample estimate from the mean
  int samples = 0;
};

// Estimates the depth-one constant of E2 from its anomalous transformation:
// kappa_i = ((cz+d)^{-2} E2(gz) - E2(z)) / (c/(cz+d)), averaged over the
// samples (all of which need c != 0).
KappaFit fit_e2_constant(const std::vector<GZSample>& samples,
                         const FormEvaluator& e2, double tol_eval);

// Residual of near-holomorphic completion at one sample:
//   F(z) = sum_r lambda^r comp[r](z) / (-4 pi Im z)^r must satisfy
//   F(gz) = (cz+d)^k F(z).
double near_holomorphic_check(const QMComponents& f, Cplx lambda,
                              const IMat& g, Cplx z);

struct LambdaFit {
  Cplx lambda{0.0, 0.0};
  double residual_max = 0.0;  // completion residual with the fitted lambda
  int samples = 0;
};

// Solves the depth-one completion equation for lambda per sample (linear),
// averages, then reports the worst completion residual with the average.
LambdaFit fit_lambda(const QMComponents& f, const std::vector<GZSample>& samples);

// Constants adopted by the floating layer, fitted once from a fixed
// internal sample set and certified against the exact ring constant
// 12 (2 pi i)^{-1} before use.  Throws if the fit drifts beyond 1e-8.
struct FittedConstants {
  Cplx kappa;
  double kappa_dispersion;
  Cplx lambda;
  double lambda_residual;
};
const FittedConstants& adopted_constants();

// Component systems used by the checks.  Evaluator calls escalate their
// truncation internally; tol_eval bounds the reported evaluation tails.
QMComponents qm_eis(EisForm which, std::shared_ptr<FormEvaluator> ev,
                    double tol_eval);
QMComponents qm_e2(std::shared_ptr<FormEvaluator> e2, Cplx kappa,
                   double tol_eval);
QMComponents qm_e2_squared(std::shared_ptr<FormEvaluator> e2, Cplx kappa,
                           double tol_eval);

// Solves the Vandermonde system of the transformation law at one point for
// the component values f_r(z): rows are the samples g_i (all sharing z,
// distinct X_i = c_i/(c_i z + d_i)), unknowns f_0(z)..f_depth(z).
std::vector<Cplx> extract_components(const std::function<Cplx(Cplx)>& f,
                                     int weight, int depth, Cplx z,
                                     const std::vector<IMat>& gs);

}  // namespace ahs
