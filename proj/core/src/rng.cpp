#include "orient/rng.hpp"

#include <algorithm>

#include <boost/random/binomial_distribution.hpp>
#include <boost/random/seed_seq.hpp>
#include <boost/random/uniform_int_distribution.hpp>

namespace orient {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  boost::random::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int Rng::uniform_index(int n) { return boost::random::uniform_int_distribution<int>(0, n - 1)(engine_); }

std::uint64_t Rng::binomial(std::uint64_t n, double p) {
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  boost::random::binomial_distribution<long long, double> dist(static_cast<long long>(n), p);
  return static_cast<std::uint64_t>(dist(engine_));
}

}  // namespace orient
