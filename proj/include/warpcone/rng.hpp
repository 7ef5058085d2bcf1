#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace warpcone {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/// Deterministic xoshiro256++ generator. Results do not depend on the
/// standard library, so identical seeds give identical streams on any
/// platform. Use stream() to derive independent substreams; sampling code
/// derives one substream per logical phase so call order cannot change
/// results.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = detail::splitmix64(sm);
  }

  /// Independent generator for substream `index` of this generator's seed.
  Rng stream(std::uint64_t index) const {
    std::uint64_t sm = state_[0] ^ detail::rotl(index + 0x632be59bd9b4e019ULL, 17);
    Rng r(0);
    for (auto& word : r.state_) word = detail::splitmix64(sm);
    return r;
  }

  std::uint64_t next() {
    const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Unbiased integer in [0, n) via Lemire's multiply-shift rejection.
  std::uint64_t below(std::uint64_t n) {
    while (true) {
      std::uint64_t x = next();
      __uint128_t m = static_cast<__uint128_t>(x) * n;
      auto lo = static_cast<std::uint64_t>(m);
      if (lo >= n || lo >= (-n) % n) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  /// Standard normal via Box-Muller (no cached spare, keeps streams simple).
  double normal() {
    double u = 1.0 - uniform01();  // (0, 1]
    double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925287 * v);
  }

 private:
  std::array<std::uint64_t, 4> state_{};
};

}  // namespace warpcone
