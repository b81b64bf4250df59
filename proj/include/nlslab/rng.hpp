// rng.hpp -- deterministic random streams.
//
// All randomness in the library flows from a single user seed, fanned out to
// independent streams by a counter scheme: stream k of seed s is an
// xoshiro256++ generator whose state is filled by splitmix64 starting from
// splitmix64(s + k * 0x9E3779B97F4A7C15).  This keeps every run reproducible
// from (seed, stream index) alone, independent of platform or library version.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace nlslab {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : state_) w = splitmix64_next(sm);
  }

  // Stream fan-out: independent generator for (seed, stream_id).
  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(seed + stream_id * 0x9E3779B97F4A7C15ULL);
  }

  std::uint64_t next_u64() {
    auto rotl = [](std::uint64_t x, int k) {
      return (x << k) | (x >> (64 - k));
    };
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0,1), 53-bit resolution.
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0,1], safe as a log() argument.
  double uniform_pos() { return double((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // Standard normal via Box-Muller (pair cached).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform_pos();
    double u2 = uniform();
    double rad = std::sqrt(-2.0 * std::log(u1));
    double ang = 6.283185307179586476925287 * u2;
    cached_ = rad * std::sin(ang);
    have_cached_ = true;
    return rad * std::cos(ang);
  }

  // Complex Gaussian with independent N(0,1) real and imaginary parts
  // (so E|z|^2 = 2; callers scale to the variance they need).
  std::complex<double> complex_normal() {
    double re = normal();
    double im = normal();
    return {re, im};
  }

  double exponential(double mean) { return -mean * std::log(uniform_pos()); }

  // Integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Lemire's method without the rejection refinement; the bias is < 2^-53
    // for the n used here, far below statistical resolution.
    return std::uint64_t((__uint128_t(next_u64()) * n) >> 64);
  }

 private:
  std::array<std::uint64_t, 4> state_{};
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace nlslab
