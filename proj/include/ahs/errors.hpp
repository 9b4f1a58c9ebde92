#pragma once

#include <stdexcept>
#include <string>

namespace ahs {

// Base for every error this library raises on bad mathematical input or
// failed numerical preconditions.  Plain std::logic_error is reserved for
// programming mistakes (out-of-range index, malformed call).
struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two jets with concrete base points that disagree, or a mix of a formal
// and a concrete jet, were combined.
struct base_point_mismatch : math_error {
  using math_error::math_error;
};

// A leading coefficient required to be invertible is zero (exact domain)
// or below the relative floor (floating domain): reciprocal of a series
// with vanishing constant term, f'(z0) ~ 0, and similar.
struct critical_point_error : math_error {
  using math_error::math_error;
};

// A Moebius map was evaluated at (a point numerically indistinguishable
// from) its pole, or a degenerate matrix was used.
struct pole_error : math_error {
  using math_error::math_error;
};

// A jet or series does not carry enough coefficients for the requested
// operation order.
struct order_error : math_error {
  using math_error::math_error;
};

// A truncated q-expansion cannot certify the requested accuracy at the
// given height: the geometric tail estimate exceeds the tolerance.
// Callers holding a coefficient generator react by raising the order.
struct truncation_error : math_error {
  double tail_estimate;
  explicit truncation_error(const std::string& msg, double tail = 0.0)
      : math_error(msg), tail_estimate(tail) {}
};

// Im z <= 0 or another domain violation for upper half-plane evaluation.
struct halfplane_error : math_error {
  using math_error::math_error;
};

}  // namespace ahs
