#pragma once

#include <array>
#include <string>
#include <vector>

#include "ahs/jet.hpp"
#include "ahs/rng.hpp"

namespace ahs {

// 2x2 matrix acting on points by (az+b)/(cz+d).  Entry type picks the
// arithmetic: long long for exact group words, Rat for exact expansions,
// Cplx for floating evaluation.
template <class T>
struct Mat2 {
  T a, b, c, d;

  T det() const { return a * d - b * c; }

  static Mat2 identity() {
    return {T(1), T(0), T(0), T(1)};
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  // Adjugate; equals the inverse exactly when det == 1.
  Mat2 adjugate() const { return {d, -b, -c, a}; }

  bool operator==(const Mat2&) const = default;
};

using IMat = Mat2<long long>;
using QMat = Mat2<Rat>;
using MoebiusMap = Mat2<Cplx>;

inline QMat to_qmat(const IMat& m) {
  return {Rat(static_cast<long>(m.a)), Rat(static_cast<long>(m.b)),
          Rat(static_cast<long>(m.c)), Rat(static_cast<long>(m.d))};
}
inline MoebiusMap to_cmat(const IMat& m) {
  return {Cplx(static_cast<double>(m.a), 0.0),
          Cplx(static_cast<double>(m.b), 0.0),
          Cplx(static_cast<double>(m.c), 0.0),
          Cplx(static_cast<double>(m.d), 0.0)};
}

// cz + d, the automorphy denominator.
template <class T>
T jfactor(const Mat2<T>& g, const T& z) {
  return g.c * z + g.d;
}

namespace detail {

template <class T>
void check_denominator(const Mat2<T>& g, const T& z, const T& den) {
  if constexpr (domain_traits<T>::exact) {
    if (domain_traits<T>::is_zero(den))
      throw pole_error("Moebius map evaluated at its pole");
  } else {
    const double scale =
        std::max({domain_traits<T>::magnitude(g.c) *
                      std::max(1.0, domain_traits<T>::magnitude(z)),
                  domain_traits<T>::magnitude(g.d), 1.0});
    if (domain_traits<T>::magnitude(den) <= kSingularFloorRel * scale)
      throw pole_error("Moebius map evaluated too close to its pole");
  }
}

}  // namespace detail

template <class T>
T act_point(const Mat2<T>& g, const T& z) {
  const T den = jfactor(g, z);
  detail::check_denominator(g, z, den);
  return (g.a * z + g.b) / den;
}

// Jet of z -> (az+b)/(cz+d) around z0 to the given order.  Closed form:
// the k-th coefficient for k >= 1 is det(g) (-c)^{k-1} / (cz0+d)^{k+1}.
template <class T>
Jet<T> local_expansion(const Mat2<T>& g, const T& z0, int order) {
  if (order < 0) throw order_error("negative jet order");
  const T den = jfactor(g, z0);
  detail::check_denominator(g, z0, den);
  std::vector<T> c(static_cast<std::size_t>(order) + 1);
  c[0] = (g.a * z0 + g.b) / den;
  if (order >= 1) {
    const T inv_den = domain_traits<T>::one() / den;
    const T step = -g.c * inv_den;
    T cur = g.det() * inv_den * inv_den;  // g'(z0)
    c[1] = cur;
    for (int k = 2; k <= order; ++k) {
      cur = cur * step;
      c[k] = cur;
    }
  }
  return Jet<T>(z0, std::move(c));
}

// Letters of the modular group in the generators used throughout:
// 'T': z+1, 't': z-1, 'S': -1/z, 's': its inverse.
enum class Letter : char { T = 'T', Tinv = 't', S = 'S', Sinv = 's' };

struct GroupWord {
  std::vector<Letter> letters;

  std::string str() const;
  static GroupWord parse(const std::string& s);
  GroupWord inverse() const;
};

inline constexpr int kMaxWordLength = 64;

IMat letter_matrix(Letter l);

// Exact integer product of the letter matrices; throws on length above
// kMaxWordLength or entry overflow.
IMat word_to_matrix(const GroupWord& w);

// Uniform letters with immediate backtracking (a letter followed by its
// inverse) rejected; length drawn uniformly in [1, max_len].
GroupWord random_word(Rng& rng, int max_len);

bool is_projective_identity(const IMat& m);

}  // namespace ahs
