#pragma once

// Monte Carlo play of the orientation game and synthetic coincidence counts.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orient/bell_engine.hpp"
#include "orient/quantum_model.hpp"
#include "orient/rng.hpp"

namespace orient {

/// beta of the maximally mixed state at any settings.
inline constexpr double kMixedBeta = 4.5;
/// beta of phi+ at the optimal settings.
inline constexpr double kQuantumMaxBeta = 7.5;

/// Outcome pairs in the order ++, +-, -+, --.
using OutcomeDistribution = std::array<double, 4>;

OutcomeDistribution outcome_distribution(const QuantumState& state, Angle ta, Angle tb);

struct TrialRecord {
  int path_a = 0;  ///< 0-based path index
  int path_b = 0;
  Sign outcome_a = Sign::Plus;
  Sign outcome_b = Sign::Plus;
  bool success = false;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// Same direction on equal paths, opposite directions on different paths.
constexpr bool trial_success(int path_a, int path_b, Sign a, Sign b) noexcept {
  return path_a == path_b ? a == b : a != b;
}

/// Precomputes the nine outcome distributions of a (state, settings) pair
/// and draws trials from them.
class TrialSampler {
 public:
  TrialSampler(const QuantumState& state, const SettingTriple& settings);

  /// Draws path_a, path_b uniformly, then the outcome pair by the Born rule.
  TrialRecord operator()(Rng& rng) const;

  const OutcomeDistribution& distribution(int path_a, int path_b) const {
    return dist_[static_cast<std::size_t>(path_a * 3 + path_b)];
  }

 private:
  std::array<OutcomeDistribution, 9> dist_{};
};

TrialRecord sample_trial(const QuantumState& state, const SettingTriple& settings, Rng& rng);

struct GameEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double success_rate = 0.0;
  /// Binomial standard error sqrt(r(1-r)/n).
  double standard_error = 0.0;
  std::uint64_t seed = 0;
};

struct GameOptions {
  unsigned threads = 0;
  /// Trials per RNG stream. Chunk c uses Rng(seed, c), so results depend on
  /// the seed and chunk size but not on the thread count.
  std::uint64_t chunk_size = 1u << 16;
};

GameEstimate run_game(const QuantumState& state, const SettingTriple& settings, std::uint64_t n_trials,
                      std::uint64_t seed, const GameOptions& options = {});

struct PairCounts {
  std::uint64_t pp = 0;
  std::uint64_t pm = 0;
  std::uint64_t mp = 0;
  std::uint64_t mm = 0;

  std::uint64_t total() const noexcept { return pp + pm + mp + mm; }
  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// Coincidence counts N_xy for each of the nine ordered setting pairs.
struct CountTable {
  SettingTriple settings;
  std::array<PairCounts, 9> cells{};

  PairCounts& at(int i, int j) { return cells[static_cast<std::size_t>(i * 3 + j)]; }
  const PairCounts& at(int i, int j) const { return cells[static_cast<std::size_t>(i * 3 + j)]; }
};

/// One multinomial draw of size `n_per_pair` per setting pair; pair (i, j)
/// uses stream Rng(seed, 3i + j).
CountTable synth_counts(const QuantumState& state, const SettingTriple& settings, std::uint64_t n_per_pair,
                        std::uint64_t seed);

/// Empirical breakdown: p_same(i) = (N_pp + N_mm)/N_TOT at (i, i) and
/// p_opp(i, j) = (N_pm + N_mp)/N_TOT at (i, j). Throws InvalidInput when any
/// pair has N_TOT = 0.
BetaBreakdown beta_from_counts(const CountTable& counts);

struct Observation {
  SettingTriple settings;
  double beta = 0.0;
};

enum class FitMethod { MaxPoint, CurveFit };

struct NoiseFit {
  double p_hat = 0.0;
  /// Sum of squared model residuals over the observations.
  double residual = 0.0;
  FitMethod method = FitMethod::MaxPoint;
};

/// Inverts beta_max = 4.5 + 3p, clamping p to [0, 1].
NoiseFit fit_noise_max_point(double beta_max);

/// Least squares of beta(x; p) = p * beta_phi+(x) + (1 - p) * 4.5.
NoiseFit fit_noise_curve(std::span<const Observation> observations);

struct NoiseFitReport {
  NoiseFit max_point;
  NoiseFit curve_fit;
};

/// Both estimates; throws InvalidInput on empty input.
NoiseFitReport fit_noise(std::span<const Observation> observations);

/// Observations of `state` at each setting triple. Without `n_per_pair` the
/// exact beta is used; otherwise beta is reconstructed from synth_counts with
/// a per-point seed derived from (seed, index).
std::vector<Observation> synthetic_observations(const QuantumState& state, std::span<const SettingTriple> settings,
                                                std::optional<std::uint64_t> n_per_pair, std::uint64_t seed);

}  // namespace orient
