#pragma once

#include <cstdint>
#include <string_view>

namespace ahs {

// Deterministic generator with cheap independent substreams.  Every random
// draw in the test suites flows through this so that a (seed, suite, case)
// triple fully determines the sample regardless of worker count or
// execution order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    // splitmix64; passes BigCrush, one multiply-xor pipeline per draw.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi] inclusive.
  long uniform_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next_u64() % span);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b) {
  a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
  return a;
}

inline std::uint64_t hash_str(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Substream generator for one named case of one suite.
inline Rng case_rng(std::uint64_t seed, std::string_view suite,
                    std::uint64_t case_index) {
  std::uint64_t h = hash_mix(seed, hash_str(suite));
  h = hash_mix(h, 0x5bf03635aca68169ull + case_index);
  return Rng(h);
}

}  // namespace ahs
