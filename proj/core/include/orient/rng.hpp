#pragma once

#include <cstdint>

#include <boost/random/mersenne_twister.hpp>

namespace orient {

/// Seedable 64-bit Mersenne Twister with deterministic stream derivation.
///
/// Rng(seed, stream) seeds the engine from (seed, stream) through a
/// seed sequence, so parallel workers get independent, reproducible streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, n).
  int uniform_index(int n);

  /// Binomial(n, p) draw; p is clamped to [0, 1].
  std::uint64_t binomial(std::uint64_t n, double p);

  std::uint64_t next_u64() { return engine_(); }

 private:
  boost::random::mt19937_64 engine_;
};

}  // namespace orient
