#include "ahs/eval.hpp"

#include <algorithm>
#include <cmath>

#include "ahs/kernels.hpp"

namespace ahs {

namespace {

double max_abs(const double* a, std::size_t count) {
  double m = 0.0;
  for (std::size_t i = 0; i < count; ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

// ln of the tail bound C (M+1)^k |q|^{M+1} / (1 - |q|), evaluated in log
// space so large M and tiny |q|^{M+1} never overflow.
double log_tail_bound(double log_c, std::size_t m_plus_1, int k,
                      double y) {
  const double log_q_abs = -2.0 * kPi * y;
  const double q_abs = std::exp(log_q_abs);
  return log_c + k * std::log(static_cast<double>(m_plus_1)) +
         static_cast<double>(m_plus_1) * log_q_abs - std::log1p(-q_abs);
}

std::vector<double> to_double(const QSeries& s) {
  std::vector<double> a(s.a.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = s.a[i].get_d();
  return a;
}

}  // namespace

EvalResult qseries_eval_weighted(const double* a, std::size_t count, Cplx z,
                                 int k) {
  if (z.imag() <= 0.0)
    throw halfplane_error("q-expansion evaluation needs Im z > 0");
  if (count == 0) throw order_error("empty q-expansion");
  std::vector<Cplx> sums(static_cast<std::size_t>(k) + 1);
  kernels::geom_power_sums(a, count, z, sums.data(), sums.size());
  const double log_c = std::log(std::max(max_abs(a, count), 1e-300));
  const double tail =
      std::exp(log_tail_bound(log_c, count, k, z.imag()));
  return {sums.back(), tail, count - 1};
}

EvalResult qseries_eval(const QSeries& s, Cplx z, int weight_of_tail,
                        double tol_rel) {
  const std::vector<double> a = to_double(s);
  EvalResult r = qseries_eval_weighted(a.data(), a.size(), z, weight_of_tail);
  const double scale = std::max(std::abs(r.value), 1e-300);
  if (r.tail * kTailSafety > tol_rel * scale)
    throw truncation_error("q-expansion truncation too short for this height",
                           r.tail);
  return r;
}

JetC jet_from_qseries(const double* a, std::size_t count, Cplx z, int order,
                      double tol_rel) {
  if (z.imag() <= 0.0)
    throw halfplane_error("q-expansion evaluation needs Im z > 0");
  if (order < 0) throw order_error("negative jet order");
  if (count == 0) throw order_error("empty q-expansion");
  const auto nk = static_cast<std::size_t>(order) + 1;
  std::vector<Cplx> sums(nk);
  kernels::geom_power_sums(a, count, z, sums.data(), nk);
  const double log_c = std::log(std::max(max_abs(a, count), 1e-300));
  const Cplx two_pi_i(0.0, 2.0 * kPi);
  std::vector<Cplx> c(nk);
  std::vector<double> tails(nk);
  Cplx factor(1.0, 0.0);
  double factorial = 1.0;
  for (std::size_t j = 0; j < nk; ++j) {
    if (j > 0) {
      factor *= two_pi_i;
      factorial *= static_cast<double>(j);
    }
    c[j] = sums[j] * factor / factorial;
    const double lt = log_tail_bound(log_c, count, static_cast<int>(j),
                                     z.imag());
    tails[j] = std::exp(lt) * std::abs(factor) / factorial;
  }
  double cmax = 0.0;
  for (const Cplx& v : c) cmax = std::max(cmax, std::abs(v));
  const double floor = 1e-6 * cmax;
  for (std::size_t j = 0; j < nk; ++j) {
    const double scale = std::max(std::abs(c[j]), floor);
    if (tails[j] * kTailSafety > tol_rel * std::max(scale, 1e-300))
      throw truncation_error(
          "q-expansion truncation too short for requested jet", tails[j]);
  }
  return JetC(z, std::move(c));
}

JetC jet_from_qseries(const QSeries& s, Cplx z, int order, double tol_rel) {
  const std::vector<double> a = to_double(s);
  return jet_from_qseries(a.data(), a.size(), z, order, tol_rel);
}

FormEvaluator::FormEvaluator(std::string label, CoeffGen gen,
                             std::size_t base_order)
    : label_(std::move(label)), gen_(std::move(gen)),
      base_order_(std::max<std::size_t>(base_order, 8)) {}

std::shared_ptr<FormEvaluator> FormEvaluator::eisenstein(
    EisForm which, std::size_t base_order) {
  const char* name = which == EisForm::E2   ? "E2"
                     : which == EisForm::E4 ? "E4"
                                            : "E6";
  return std::make_shared<FormEvaluator>(
      name,
      [which](std::size_t count) { return eisenstein_coeffs_d(which, count); },
      base_order);
}

std::shared_ptr<FormEvaluator> FormEvaluator::discriminant(
    std::size_t base_order) {
  return std::make_shared<FormEvaluator>(
      "delta", [](std::size_t count) { return disc_coeffs_d(count); },
      base_order);
}

std::shared_ptr<const std::vector<double>> FormEvaluator::coeffs_at_least(
    std::size_t count) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!cache_ || cache_->size() < count)
    cache_ = std::make_shared<const std::vector<double>>(gen_(count));
  return cache_;
}

EvalResult FormEvaluator::value(Cplx z, double tol_rel) const {
  std::size_t m = base_order_;
  for (;;) {
    const auto coeffs = coeffs_at_least(m + 1);
    const EvalResult r = qseries_eval_weighted(coeffs->data(), m + 1, z, 0);
    const double scale = std::max(std::abs(r.value), 1e-300);
    if (r.tail * kTailSafety <= tol_rel * scale) return r;
    if (m >= kMaxQOrder)
      throw truncation_error("q-expansion cap reached at this height", r.tail);
    m = std::min(m * 4, kMaxQOrder);
  }
}

JetC FormEvaluator::jet(Cplx z, int order, double tol_rel) const {
  // The ladder is a pure function of (z, order, tol): each step uses
  // exactly its own truncation length even when the cache holds more, so
  // results never depend on evaluation history.
  std::size_t m = base_order_;
  for (;;) {
    const auto coeffs = coeffs_at_least(m + 1);
    try {
      return jet_from_qseries(coeffs->data(), m + 1, z, order, tol_rel);
    } catch (const truncation_error&) {
      if (m >= kMaxQOrder) throw;
      m = std::min(m * 4, kMaxQOrder);
    }
  }
}

}  // namespace ahs
