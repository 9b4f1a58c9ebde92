#include <cmath>
#include <vector>

#include "doctest.h"

#include "ahs/eisenstein.hpp"
#include "ahs/errors.hpp"
#include "ahs/eval.hpp"
#include "ahs/qseries.hpp"

using namespace ahs;

namespace {

// Divisor-power sums by sieve, independent of the paired-divisor loop.
std::vector<mpz_class> sigma_sieve(unsigned k, int count) {
  std::vector<mpz_class> acc(static_cast<std::size_t>(count) + 1, mpz_class(0));
  for (int d = 1; d <= count; ++d) {
    mpz_class dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
    for (int m = d; m <= count; m += d) acc[static_cast<std::size_t>(m)] += dk;
  }
  return acc;
}

}  // namespace

TEST_CASE("divisor sums match an independent sieve") {
  const auto s1 = sigma_sieve(1, 60);
  const auto s3 = sigma_sieve(3, 60);
  const auto s5 = sigma_sieve(5, 60);
  for (int n = 1; n <= 60; ++n) {
    CHECK(sigma_pow(1, static_cast<std::uint64_t>(n)) == s1[static_cast<std::size_t>(n)]);
    CHECK(sigma_pow(3, static_cast<std::uint64_t>(n)) == s3[static_cast<std::size_t>(n)]);
    CHECK(sigma_pow(5, static_cast<std::uint64_t>(n)) == s5[static_cast<std::size_t>(n)]);
  }
  CHECK(sigma_pow(1, 6) == 12);   // 1+2+3+6
  CHECK(sigma_pow(3, 2) == 9);    // 1+8
  CHECK(sigma_pow(5, 2) == 33);   // 1+32
}

TEST_CASE("Eisenstein q-expansions have the frozen leading coefficients") {
  const QSeries e2 = eisenstein_q(EisForm::E2, 6);
  const QSeries e4 = eisenstein_q(EisForm::E4, 6);
  const QSeries e6 = eisenstein_q(EisForm::E6, 6);
  CHECK(e2.a[0] == 1);
  CHECK(e2.a[1] == rat(-24));
  CHECK(e2.a[2] == rat(-72));
  CHECK(e2.a[3] == rat(-96));
  CHECK(e4.a[1] == rat(240));
  CHECK(e4.a[2] == rat(2160));
  CHECK(e4.a[3] == rat(6720));
  CHECK(e6.a[1] == rat(-504));
  CHECK(e6.a[2] == rat(-16632));
  CHECK(e6.a[3] == rat(-122976));
}

TEST_CASE("double coefficients agree with the exact expansion") {
  const int M = 120;
  const QSeries e4 = eisenstein_q(EisForm::E4, M);
  const std::vector<double> d4 = eisenstein_coeffs_d(EisForm::E4, M + 1);
  for (int n = 0; n <= M; ++n) {
    const double want = e4.a[static_cast<std::size_t>(n)].get_d();
    const double got = d4[static_cast<std::size_t>(n)];
    CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("discriminant coefficients match the exact cusp form expansion") {
  // (E4^3 - E6^2)/1728 computed exactly, then compared with the floating
  // convolution route; the first coefficients are the tau values.
  const int M = 24;
  const QSeries e4 = eisenstein_q(EisForm::E4, M);
  const QSeries e6 = eisenstein_q(EisForm::E6, M);
  const QSeries cube = ps_mul(ps_mul(e4, e4), e4);
  const QSeries sq = ps_mul(e6, e6);
  QSeries delta = ps_sub(cube, sq);
  for (auto& c : delta.a) c /= 1728;
  CHECK(delta.a[0] == 0);
  CHECK(delta.a[1] == 1);
  CHECK(delta.a[2] == rat(-24));
  CHECK(delta.a[3] == rat(252));
  CHECK(delta.a[4] == rat(-1472));
  CHECK(delta.a[5] == rat(4830));

  const std::vector<double> dd = disc_coeffs_d(M + 1);
  for (int n = 0; n <= M; ++n) {
    const double want = delta.a[static_cast<std::size_t>(n)].get_d();
    CHECK(std::abs(dd[static_cast<std::size_t>(n)] - want) <=
          1e-9 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("evaluation matches frozen high-precision values") {
  const auto e2 = FormEvaluator::eisenstein(EisForm::E2, 40);
  const auto e4 = FormEvaluator::eisenstein(EisForm::E4, 40);
  const auto e6 = FormEvaluator::eisenstein(EisForm::E6, 40);
  const Cplx i(0.0, 1.0);

  const EvalResult r4 = e4->value(i, 1e-12);
  CHECK(std::abs(r4.value - Cplx(1.4557628922687093, 0.0)) < 1e-12);

  const EvalResult r2 = e2->value(Cplx(0.0, 2.0), 1e-12);
  CHECK(std::abs(r2.value - Cplx(0.99991630290781483, 0.0)) < 1e-12);

  // E6 vanishes at the elliptic point i; E2(i) = 3/pi.
  const EvalResult r6 = e6->value(i, 1e-12);
  CHECK(std::abs(r6.value) < 1e-12);
  const EvalResult r2i = e2->value(i, 1e-12);
  CHECK(std::abs(r2i.value - Cplx(3.0 / kPi, 0.0)) < 1e-12);
}

TEST_CASE("evaluation reports honest truncation tails") {
  // A fixed short series cannot certify a low point; the evaluator must
  // throw rather than return a silently wrong value.
  const QSeries e4 = eisenstein_q(EisForm::E4, 10);
  CHECK_THROWS_AS((void)qseries_eval(e4, Cplx(0.0, 0.02), 0, 1e-12),
                  truncation_error);
  // The escalating evaluator handles the same point by growing the order.
  const auto ev = FormEvaluator::eisenstein(EisForm::E4, 10);
  const EvalResult r = ev->value(Cplx(0.0, 0.02), 1e-10);
  CHECK(r.order_used > 10);
  CHECK(r.tail <= 1e-10 * std::abs(r.value));
}

TEST_CASE("evaluation rejects the lower half plane") {
  const auto ev = FormEvaluator::eisenstein(EisForm::E4, 20);
  CHECK_THROWS_AS((void)ev->value(Cplx(0.0, -1.0), 1e-10), halfplane_error);
  CHECK_THROWS_AS((void)ev->value(Cplx(0.0, 0.0), 1e-10), halfplane_error);
}

TEST_CASE("jets differentiate the q-expansion") {
  // d/dz E4 = 2 pi i sum n a_n q^n; compare the jet's linear coefficient
  // against a separately weighted evaluation.
  const auto ev = FormEvaluator::eisenstein(EisForm::E4, 60);
  const Cplx z(0.21, 1.1);
  const JetC jet = ev->jet(z, 3, 1e-10);
  CHECK(std::abs(jet.value() - ev->value(z, 1e-10).value) < 1e-9);

  const QSeries e4 = eisenstein_q(EisForm::E4, 60);
  QSeries theta = ps_theta(e4);
  const EvalResult tv = qseries_eval(theta, z, 0, 1e-10);
  const Cplx want = Cplx(0.0, 2.0 * kPi) * tv.value;
  CHECK(std::abs(jet[1] - want) < 1e-8 * std::abs(want));
}
