#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <utility>

#include "qcasino/bitseq.hpp"

namespace qcasino {

// Deterministic, cross-platform random generator with a pinned algorithm so
// streams are bit-stable across runs and across implementation languages.
//
// Algorithm (fixed, do not change without regenerating golden vectors):
//   * state seeding: four successive outputs of splitmix64 started at `seed`
//   * stream: xoshiro256** (Blackman & Vigna, public domain reference code)
//   * uniform01: (next_u64() >> 11) * 2^-53, in [0, 1)
//   * bit: the top bit of next_u64()
//   * normal_pair: Box-Muller on (1 - uniform01, uniform01):
//       r = sqrt(-2 ln u1), z0 = r cos(2 pi u2), z1 = r sin(2 pi u2)
//   * derive(seed, label): splitmix64 finalizer of
//       seed + 0x9E3779B97F4A7C15 * (label + 1)   (mod 2^64)
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64_next(x);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Fair bit.
  int bit() { return static_cast<int>(next_u64() >> 63); }

  // Two independent standard normals from one Box-Muller step.
  std::pair<double, double> normal_pair() {
    const double u1 = 1.0 - uniform01();  // in (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  // Independent sub-stream seed for a labeled trial/stream.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t label) {
    return splitmix64_mix(seed + 0x9E3779B97F4A7C15ULL * (label + 1));
  }

  SeededRng derived(std::uint64_t label) const { return SeededRng(derive(seed_, label)); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t splitmix64_next(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(x);
  }

  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_;
};

// Unbiased coin flip.
inline int sample_cbit(SeededRng& rng) { return rng.bit(); }

// An unbiased random binary sequence backed by an owned generator stream.
inline BitSource random_bit_source(SeededRng rng) {
  auto owned = std::make_shared<SeededRng>(rng);
  return BitSource([owned] { return owned->bit() ? '1' : '0'; });
}

}  // namespace qcasino
