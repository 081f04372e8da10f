#pragma once

#include <cmath>
#include <cstdint>

namespace pose {

/// Counter-based generator (splitmix64 core). Every consumer derives its own
/// stream from (seed, stream id), so parallel schedules reproduce the
/// sequential bits exactly, independent of platform or libstdc++ version.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) { next_u64(); }

  Rng(uint64_t seed, uint64_t stream) : state_(mix(seed) ^ mix(stream * 0x9e3779b97f4a7c15ull + 1)) {
    next_u64();
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n); n > 0.
  uint64_t uniform_index(uint64_t n) {
    // 64-bit multiply-shift; bias is negligible for the n used here
    return static_cast<uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(uniform_index(static_cast<uint64_t>(hi - lo + 1)));
  }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double two_pi = 6.283185307179586;
    spare_ = r * std::sin(two_pi * u2);
    have_spare_ = true;
    return r * std::cos(two_pi * u2);
  }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
  double spare_{0.0};
  bool have_spare_{false};
};

}  // namespace pose
