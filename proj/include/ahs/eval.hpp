#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ahs/eisenstein.hpp"
#include "ahs/jet.hpp"
#include "ahs/qseries.hpp"

namespace ahs {

// Ceiling for escalating q-expansion truncation.  Heights down to
// Im z ~ 1e-5 certify comfortably below this.
inline constexpr std::size_t kMaxQOrder = std::size_t{1} << 20;

// Safety factor applied to the reported geometric tail before comparing
// against the tolerance; covers coefficient growth past the truncation
// (divisor sums grow polynomially, so the plain geometric bound is a few
// times optimistic near the decay threshold).
inline constexpr double kTailSafety = 8.0;

struct EvalResult {
  Cplx value;
  double tail;            // reported bound on the truncation error
  std::size_t order_used; // truncation order M actually summed
};

// Weighted evaluation sum_{n=0}^{M} a[n] n^k q^n with q = exp(2 pi i z),
// plus the tail bound max|a| * (M+1)^k * |q|^{M+1} / (1-|q|).  Throws
// halfplane_error when Im z <= 0.  No tolerance judgment here.
EvalResult qseries_eval_weighted(const double* a, std::size_t count, Cplx z,
                                 int k);

// Tolerance-checked evaluation of an exact series at fixed truncation.
// weight_of_tail picks the n^k weighting (0 for plain values).  Throws
// truncation_error when the reported tail exceeds the tolerance; callers
// holding a generator escalate and retry.
EvalResult qseries_eval(const QSeries& s, Cplx z, int weight_of_tail,
                        double tol_rel);

// Jet of f(z) = sum a_n q^n at z to the given order:
//   c_j = (2 pi i)^j / j! * sum a_n n^j q^n.
// Throws truncation_error when any coefficient's tail bound fails the
// tolerance (relative to that coefficient, with a floor at 1e-6 of the
// largest one so negligible coefficients cannot stall certification).
JetC jet_from_qseries(const double* a, std::size_t count, Cplx z, int order,
                      double tol_rel);
JetC jet_from_qseries(const QSeries& s, Cplx z, int order, double tol_rel);

// Evaluation facade over a coefficient generator: caches coefficients,
// escalates the truncation order by factors of 4 from base_order until the
// tail certifies, up to kMaxQOrder.  Safe for concurrent use; results
// depend only on (z, order, tol), never on cache state.
class FormEvaluator {
 public:
  using CoeffGen = std::function<std::vector<double>(std::size_t count)>;

  FormEvaluator(std::string label, CoeffGen gen, std::size_t base_order);

  static std::shared_ptr<FormEvaluator> eisenstein(EisForm which,
                                                   std::size_t base_order);
  // (e4^3 - e6^2) / 1728, weight 12 cusp form.
  static std::shared_ptr<FormEvaluator> discriminant(std::size_t base_order);

  EvalResult value(Cplx z, double tol_rel) const;
  JetC jet(Cplx z, int order, double tol_rel) const;

  const std::string& label() const { return label_; }
  std::size_t base_order() const { return base_order_; }

 private:
  std::shared_ptr<const std::vector<double>> coeffs_at_least(
      std::size_t count) const;

  std::string label_;
  CoeffGen gen_;
  std::size_t base_order_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const std::vector<double>> cache_;
};

}  // namespace ahs
