#include "ahs/moebius.hpp"

#include <limits>

namespace ahs {

std::string GroupWord::str() const {
  std::string s;
  s.reserve(letters.size());
  for (Letter l : letters) s.push_back(static_cast<char>(l));
  return s;
}

GroupWord GroupWord::parse(const std::string& s) {
  GroupWord w;
  w.letters.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case 'T': w.letters.push_back(Letter::T); break;
      case 't': w.letters.push_back(Letter::Tinv); break;
      case 'S': w.letters.push_back(Letter::S); break;
      case 's': w.letters.push_back(Letter::Sinv); break;
      default:
        throw math_error(std::string("unknown group letter '") + c + "'");
    }
  }
  return w;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    switch (*it) {
      case Letter::T: w.letters.push_back(Letter::Tinv); break;
      case Letter::Tinv: w.letters.push_back(Letter::T); break;
      case Letter::S: w.letters.push_back(Letter::Sinv); break;
      case Letter::Sinv: w.letters.push_back(Letter::S); break;
    }
  }
  return w;
}

IMat letter_matrix(Letter l) {
  switch (l) {
    case Letter::T: return {1, 1, 0, 1};
    case Letter::Tinv: return {1, -1, 0, 1};
    case Letter::S: return {0, -1, 1, 0};
    case Letter::Sinv: return {0, 1, -1, 0};
  }
  throw math_error("unknown group letter");
}

namespace {

long long checked_ll(__int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw math_error("group word matrix entry overflow");
  return static_cast<long long>(v);
}

IMat mul_checked(const IMat& x, const IMat& y) {
  const auto m = [](long long a, long long b) {
    return static_cast<__int128>(a) * b;
  };
  return {checked_ll(m(x.a, y.a) + m(x.b, y.c)),
          checked_ll(m(x.a, y.b) + m(x.b, y.d)),
          checked_ll(m(x.c, y.a) + m(x.d, y.c)),
          checked_ll(m(x.c, y.b) + m(x.d, y.d))};
}

}  // namespace

IMat word_to_matrix(const GroupWord& w) {
  if (static_cast<int>(w.letters.size()) > kMaxWordLength)
    throw math_error("group word too long");
  IMat m = IMat::identity();
  for (Letter l : w.letters) m = mul_checked(m, letter_matrix(l));
  return m;
}

GroupWord random_word(Rng& rng, int max_len) {
  if (max_len < 1 || max_len > kMaxWordLength)
    throw math_error("word length out of range");
  const int len = static_cast<int>(rng.uniform_int(1, max_len));
  static constexpr Letter kAll[4] = {Letter::T, Letter::Tinv, Letter::S,
                                     Letter::Sinv};
  const auto inverse_of = [](Letter l) {
    switch (l) {
      case Letter::T: return Letter::Tinv;
      case Letter::Tinv: return Letter::T;
      case Letter::S: return Letter::Sinv;
      case Letter::Sinv: return Letter::S;
    }
    return Letter::T;
  };
  GroupWord w;
  w.letters.reserve(len);
  for (int i = 0; i < len; ++i) {
    Letter l;
    do {
      l = kAll[rng.uniform_int(0, 3)];
    } while (!w.letters.empty() && l == inverse_of(w.letters.back()));
    w.letters.push_back(l);
  }
  return w;
}

bool is_projective_identity(const IMat& m) {
  return (m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1) ||
         (m.a == -1 && m.b == 0 && m.c == 0 && m.d == -1);
}

}  // namespace ahs
