#include <vector>

#include "doctest.h"

#include "ahs/errors.hpp"
#include "ahs/jet.hpp"
#include "ahs/rng.hpp"

using namespace ahs;

namespace {

JetQ random_jet(Rng& rng, int order, bool zero_constant, bool unit_slope) {
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  c[0] = zero_constant ? rat(0)
                       : rat(static_cast<long>(rng.uniform_int(-9, 9)),
                             static_cast<long>(rng.uniform_int(1, 9)));
  const long sign = rng.uniform_int(0, 1) == 0 ? 1 : -1;
  c[1] = unit_slope ? rat(1)
                    : rat(sign * static_cast<long>(rng.uniform_int(1, 9)),
                          static_cast<long>(rng.uniform_int(1, 9)));
  for (int k = 2; k <= order; ++k)
    c[static_cast<std::size_t>(k)] =
        rat(static_cast<long>(rng.uniform_int(-9, 9)),
            static_cast<long>(rng.uniform_int(1, 9)));
  return JetQ(std::nullopt, std::move(c));
}

}  // namespace

TEST_CASE("multiplication is the exact Cauchy product") {
  // (1 + u)^2 * (1 - u) = 1 + u - u^2 - u^3
  const JetQ a(std::nullopt, {rat(1), rat(2), rat(1), rat(0)});
  const JetQ b(std::nullopt, {rat(1), rat(-1), rat(0), rat(0)});
  const JetQ p = jet_mul(a, b);
  CHECK(p[0] == rat(1));
  CHECK(p[1] == rat(1));
  CHECK(p[2] == rat(-1));
  CHECK(p[3] == rat(-1));
}

TEST_CASE("reciprocal inverts multiplicatively and round-trips") {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    JetQ f = random_jet(rng, 9, false, false);
    if (f.value() == 0) f = jet_add_scalar(f, rat(1));
    const JetQ r = jet_reciprocal(f);
    const JetQ prod = jet_mul(f, r);
    CHECK(prod[0] == rat(1));
    for (int k = 1; k <= 9; ++k) CHECK(prod[k] == rat(0));
    CHECK(jet_eq(jet_reciprocal(r), f));
  }
}

TEST_CASE("reciprocal of a vanishing constant term throws") {
  const JetQ f(std::nullopt, {rat(0), rat(1), rat(2)});
  CHECK_THROWS_AS((void)jet_reciprocal(f), critical_point_error);
}

TEST_CASE("derivative of a product obeys the Leibniz rule") {
  Rng rng(12);
  const JetQ f = random_jet(rng, 8, false, false);
  const JetQ g = random_jet(rng, 8, false, false);
  const JetQ lhs = jet_derive(jet_mul(f, g));
  const JetQ rhs =
      jet_add(jet_mul(jet_derive(f), g.truncated(7)),
              jet_mul(f.truncated(7), jet_derive(g)));
  CHECK(jet_eq(lhs, rhs));
}

TEST_CASE("composition with the identity is the identity") {
  Rng rng(13);
  const JetQ f = random_jet(rng, 8, false, false);
  const JetQ id = JetQ::variable(rat(0), 8);
  CHECK(jet_eq(jet_compose(f, id), f));
}

TEST_CASE("polyval evaluates the truncated polynomial") {
  const JetQ f(std::nullopt, {rat(1), rat(2), rat(3)});
  CHECK(jet_polyval(f, rat(1, 2)) == rat(1) + rat(1) + rat(3, 4));
}

TEST_CASE("compositional inverse round-trips to the identity") {
  Rng rng(14);
  for (int rep = 0; rep < 15; ++rep) {
    const JetQ w = random_jet(rng, 10, true, false);
    const JetQ winv = jet_compositional_inverse(w);
    const JetQ round = jet_compose(winv, w);
    CHECK(round[0] == rat(0));
    CHECK(round[1] == rat(1));
    for (int k = 2; k <= 10; ++k) CHECK(round[k] == rat(0));
    // Both orders: w(winv(u)) = u as well.
    const JetQ round2 = jet_compose(w, winv);
    CHECK(round2[1] == rat(1));
    for (int k = 2; k <= 10; ++k) CHECK(round2[k] == rat(0));
  }
}

TEST_CASE("compose rejects inner jets that move the base point") {
  const JetQ outer(rat(5), {rat(1), rat(1), rat(1)});
  const JetQ inner(std::nullopt, {rat(4), rat(1), rat(0)});  // value 4 != base 5
  CHECK_THROWS_AS((void)jet_compose(outer, inner), base_point_mismatch);
}

TEST_CASE("mixed concrete bases must agree") {
  const JetQ a(rat(1), {rat(1), rat(2)});
  const JetQ b(rat(2), {rat(3), rat(4)});
  CHECK_THROWS_AS((void)jet_add(a, b), base_point_mismatch);
  const JetQ c(rat(1), {rat(3), rat(4)});
  CHECK(jet_add(a, c)[0] == rat(4));
}

TEST_CASE("arithmetic truncates to the shorter operand") {
  const JetQ a(std::nullopt, {rat(1), rat(2), rat(3), rat(4)});
  const JetQ b(std::nullopt, {rat(1), rat(1)});
  CHECK(jet_mul(a, b).order() == 1);
  CHECK(jet_add(a, b).order() == 1);
}

TEST_CASE("jet_tail shifts coefficients down") {
  const JetQ a(std::nullopt, {rat(7), rat(5), rat(3), rat(2)});
  const JetQ t = jet_tail(a, 2);
  CHECK(t.order() == 1);
  CHECK(t[0] == rat(3));
  CHECK(t[1] == rat(2));
}

TEST_CASE("complex jets use the dispatched convolution") {
  // (1 + iu)(1 - iu) = 1 + u^2
  const JetC a(std::nullopt, {Cplx(1, 0), Cplx(0, 1), Cplx(0, 0)});
  const JetC b(std::nullopt, {Cplx(1, 0), Cplx(0, -1), Cplx(0, 0)});
  const JetC p = jet_mul(a, b);
  CHECK(std::abs(p[0] - Cplx(1, 0)) < 1e-15);
  CHECK(std::abs(p[1]) < 1e-15);
  CHECK(std::abs(p[2] - Cplx(1, 0)) < 1e-15);
}
