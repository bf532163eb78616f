#pragma once

#include <cstdint>

namespace trailnav {

/// Counter-based deterministic RNG (splitmix64 core).
///
/// std::mt19937 is portable but the standard distributions are not
/// (uniform_real_distribution output differs between library versions),
/// so byte-identical replays hand-roll the whole stream. A stream keyed
/// by (seed, frame) gives each frame its own noise independent of the
/// order frames are evaluated in.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // decorrelate trivially related seeds (0, 1, 2, ...)
    next_u64();
    next_u64();
  }

  /// Stream keyed by (seed, counter), e.g. counter = frame sequence.
  Rng(std::uint64_t seed, std::uint64_t counter)
      : Rng(mix(seed ^ mix(counter + 0x9e3779b97f4a7c15ull))) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n) {
    // multiply-shift; bias is < 2^-64 * n, negligible for our ranges
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdull;
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ull;
    return z ^ (z >> 33);
  }

  std::uint64_t state_;
};

}  // namespace trailnav
