#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ahs/eval.hpp"
#include "ahs/quasimodular.hpp"
#include "ahs/schwarzian.hpp"

namespace ahs {

// A candidate rho-equivariant meromorphic function on the upper half
// plane, exposed through point values and jets.  Evaluation may throw
// (pole, critical point, truncation); samplers react by redrawing.
struct EquivariantFn {
  std::string label;
  std::function<Cplx(Cplx)> value;
  std::function<JetC(Cplx, int)> jet_at;  // jet around z of the given order
};

// h_f(z) = z + k f(z)/f'(z) for a weight-k holomorphic form supplied as an
// escalating evaluator.  Equivariant for the identity representation.
EquivariantFn rational_equivariant(std::shared_ptr<FormEvaluator> f,
                                   int weight, double tol_eval);

// Same construction from a fixed exact q-expansion (no escalation; the
// given truncation either certifies or evaluation throws).
EquivariantFn rational_equivariant(const QSeries& f_q, int weight,
                                   double tol_eval);

// h for the weight-12 cusp form (e4^3 - e6^2)/1728, with jets assembled
// from the two Eisenstein evaluators so escalation stays cheap.
EquivariantFn rational_equivariant_disc(std::shared_ptr<FormEvaluator> e4,
                                        std::shared_ptr<FormEvaluator> e6,
                                        double tol_eval);

// Named builders for the CLI surface: E4, E6, disc.
EquivariantFn rational_equivariant_named(const std::string& name,
                                         std::size_t base_order,
                                         double tol_eval);

// Negative control: z -> e^z, not equivariant for any representation.
EquivariantFn exp_map();

// Degenerate control: a Moebius map (all S_n vanish identically).
EquivariantFn moebius_map_fn(const IMat& g);

// Chordal distance on the Riemann sphere, bounded by 1, tolerant of
// infinities.
double chordal(Cplx a, Cplx b);

// max over points of chordal(h(g z), rho_g(h(z))).
CheckReport equivariance_check(const EquivariantFn& h, const IMat& g,
                               const MoebiusMap& rho_g,
                               const std::vector<Cplx>& points);

struct RepFit {
  MoebiusMap rho;            // det-1, sign-normalized
  double fit_residual = 0.0; // smallest singular value over matrix scale
  double validation_max = 0.0;  // chordal residual on held-out points
  bool degenerate = false;
};

// Least-squares fit of rho(g) from h(g z_i) = rho(h(z_i)): points feed the
// homogeneous system a x + b - c x y - d y = 0; the last two points are
// held out for validation.  Needs at least 6 points.
RepFit fit_representation(const EquivariantFn& h, const IMat& g,
                          const std::vector<Cplx>& points);

// Projective distance between det-normalized matrices (min over the sign
// ambiguity), relative to the larger entry scale.
double projective_deviation(const MoebiusMap& a, const MoebiusMap& b);

struct HomomorphismReport {
  double max_deviation = 0.0;
  int words = 0;
  bool degenerate = false;
};

// For each word w = uv (split at the midpoint), fits rho(w), rho(u),
// rho(v) independently and compares rho(u) rho(v) with rho(w)
// projectively.  Words must have length >= 2.
HomomorphismReport homomorphism_check(const EquivariantFn& h,
                                      const std::vector<GroupWord>& words,
                                      const std::vector<Cplx>& points);

struct MainVerifyConfig {
  int n_lo = 2;
  int n_hi = 6;
  double tol = 1e-7;
  // Largest |S_n| below which the whole configuration counts as
  // degenerate (Moebius h, identity h).
  double degenerate_floor = 1e-10;
};

struct MainTheoremReport {
  std::map<int, double> per_n;  // max residual of the transform law per n
  double component_residual_max = 0.0;
  double s_scale = 0.0;  // largest |S_n| value encountered
  long cases = 0;
  std::string verdict;  // PASS | FAIL | DEGENERATE
};

// Checks, for every sample (g, z) and every n in [n_lo, n_hi]:
//   (cz+d)^{-2n} S_n[h](g z) = sum_{j=0}^{n-2} C(n-2,j) S_{n-j}[h](z)
//                              (c/(cz+d))^j
// with S_n read off jets of h at z and g z, plus the component form of the
// same law at depths r >= 1.  Samples must already evaluate cleanly.
MainTheoremReport main_theorem_verify(const EquivariantFn& h,
                                      const std::vector<GZSample>& samples,
                                      const MainVerifyConfig& cfg);

struct ConverseReport {
  bool witness_pass = false;      // law at the witness level only
  MainTheoremReport full;         // law across the full range
  bool consistent = false;        // witness verdict predicted the range
};

// Tests the equivalence one level at a time: a single witness level n is
// checked first, then the whole range; consistent means the witness
// outcome matched the range outcome.
ConverseReport converse_check(const EquivariantFn& h, int n_witness,
                              const std::vector<GZSample>& samples,
                              MainVerifyConfig cfg);

}  // namespace ahs
