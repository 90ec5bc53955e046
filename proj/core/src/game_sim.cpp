#include "orient/game_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "parallel.hpp"

namespace orient {

namespace {

constexpr std::array<std::pair<Sign, Sign>, 4> kOutcomePairs = {{{Sign::Plus, Sign::Plus},
                                                                 {Sign::Plus, Sign::Minus},
                                                                 {Sign::Minus, Sign::Plus},
                                                                 {Sign::Minus, Sign::Minus}}};

// Clamps rounding-level negatives to zero and renormalizes.
OutcomeDistribution sanitize(OutcomeDistribution d) {
  for (auto& x : d) x = std::max(x, 0.0);
  const double total = std::accumulate(d.begin(), d.end(), 0.0);
  for (auto& x : d) x /= total;
  return d;
}

double residual_sum(std::span<const Observation> obs, double p) {
  const QuantumState pure = bell_state_density(BellLabel::PhiPlus);
  double rss = 0.0;
  for (const auto& o : obs) {
    const double model = p * beta_value(pure, o.settings).beta + (1.0 - p) * kMixedBeta;
    rss += (o.beta - model) * (o.beta - model);
  }
  return rss;
}

}  // namespace

OutcomeDistribution outcome_distribution(const QuantumState& state, Angle ta, Angle tb) {
  OutcomeDistribution d{};
  for (std::size_t k = 0; k < 4; ++k)
    d[k] = joint_probability(state, kOutcomePairs[k].first, ta, kOutcomePairs[k].second, tb);
  return d;
}

TrialSampler::TrialSampler(const QuantumState& state, const SettingTriple& settings) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      dist_[static_cast<std::size_t>(a * 3 + b)] = sanitize(outcome_distribution(state, settings[a], settings[b]));
}

TrialRecord TrialSampler::operator()(Rng& rng) const {
  TrialRecord r;
  r.path_a = rng.uniform_index(3);
  r.path_b = rng.uniform_index(3);
  const auto& d = distribution(r.path_a, r.path_b);
  const double u = rng.uniform();
  std::size_t k = 0;
  double acc = d[0];
  while (k < 3 && u >= acc) acc += d[++k];
  r.outcome_a = kOutcomePairs[k].first;
  r.outcome_b = kOutcomePairs[k].second;
  r.success = trial_success(r.path_a, r.path_b, r.outcome_a, r.outcome_b);
  return r;
}

TrialRecord sample_trial(const QuantumState& state, const SettingTriple& settings, Rng& rng) {
  return TrialSampler(state, settings)(rng);
}

GameEstimate run_game(const QuantumState& state, const SettingTriple& settings, std::uint64_t n_trials,
                      std::uint64_t seed, const GameOptions& options) {
  if (n_trials < 1) throw InvalidInput("run_game: need at least one trial");
  if (options.chunk_size < 1) throw InvalidInput("run_game: chunk size must be positive");
  const TrialSampler sampler(state, settings);
  const std::uint64_t chunks = (n_trials + options.chunk_size - 1) / options.chunk_size;
  std::vector<std::uint64_t> wins(chunks, 0);
  detail::parallel_for(chunks, options.threads, [&](std::size_t c) {
    Rng rng(seed, c);
    const std::uint64_t begin = c * options.chunk_size;
    const std::uint64_t end = std::min(n_trials, begin + options.chunk_size);
    std::uint64_t w = 0;
    for (std::uint64_t t = begin; t < end; ++t) w += sampler(rng).success;
    wins[c] = w;
  });

  GameEstimate e;
  e.trials = n_trials;
  e.seed = seed;
  e.successes = std::accumulate(wins.begin(), wins.end(), std::uint64_t{0});
  e.success_rate = static_cast<double>(e.successes) / static_cast<double>(n_trials);
  e.standard_error = std::sqrt(e.success_rate * (1.0 - e.success_rate) / static_cast<double>(n_trials));
  return e;
}

CountTable synth_counts(const QuantumState& state, const SettingTriple& settings, std::uint64_t n_per_pair,
                        std::uint64_t seed) {
  if (n_per_pair < 1) throw InvalidInput("synth_counts: need at least one count per pair");
  CountTable table;
  table.settings = settings;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const OutcomeDistribution d = sanitize(outcome_distribution(state, settings[i], settings[j]));
      Rng rng(seed, static_cast<std::uint64_t>(i * 3 + j));
      // Multinomial as a chain of conditional binomials.
      std::array<std::uint64_t, 4> n{};
      std::uint64_t remaining = n_per_pair;
      double mass = 1.0;
      for (std::size_t k = 0; k < 3; ++k) {
        const double q = mass > 0.0 ? std::clamp(d[k] / mass, 0.0, 1.0) : 0.0;
        n[k] = rng.binomial(remaining, q);
        remaining -= n[k];
        mass -= d[k];
      }
      n[3] = remaining;
      table.at(i, j) = {n[0], n[1], n[2], n[3]};
    }
  }
  return table;
}

BetaBreakdown beta_from_counts(const CountTable& counts) {
  auto ratio = [](std::uint64_t num, std::uint64_t den) {
    return static_cast<double>(num) / static_cast<double>(den);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (counts.at(i, j).total() == 0) {
        throw InvalidInput("beta_from_counts: no coincidences for setting pair (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")");
      }
  std::array<double, 3> same{};
  std::array<double, 6> opp{};
  for (int i = 0; i < 3; ++i) {
    const PairCounts& c = counts.at(i, i);
    same[i] = ratio(c.pp + c.mm, c.total());
  }
  for (std::size_t k = 0; k < kOrderedPairs.size(); ++k) {
    const PairCounts& c = counts.at(kOrderedPairs[k].first, kOrderedPairs[k].second);
    opp[k] = ratio(c.pm + c.mp, c.total());
  }
  return assemble_breakdown(same, opp);
}

NoiseFit fit_noise_max_point(double beta_max) {
  const double p = std::clamp((beta_max - kMixedBeta) / (kQuantumMaxBeta - kMixedBeta), 0.0, 1.0);
  const double model = kMixedBeta + p * (kQuantumMaxBeta - kMixedBeta);
  return {p, (model - beta_max) * (model - beta_max), FitMethod::MaxPoint};
}

NoiseFit fit_noise_curve(std::span<const Observation> observations) {
  if (observations.empty()) throw InvalidInput("fit_noise: no observations");
  const QuantumState pure = bell_state_density(BellLabel::PhiPlus);
  // beta - 4.5 = p * (beta_pure - 4.5): one-parameter linear least squares.
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& o : observations) {
    const double x = beta_value(pure, o.settings).beta - kMixedBeta;
    sxy += x * (o.beta - kMixedBeta);
    sxx += x * x;
  }
  if (sxx <= 1e-300) throw InvalidInput("fit_noise: observations do not constrain p");
  const double p = std::clamp(sxy / sxx, 0.0, 1.0);
  return {p, residual_sum(observations, p), FitMethod::CurveFit};
}

NoiseFitReport fit_noise(std::span<const Observation> observations) {
  if (observations.empty()) throw InvalidInput("fit_noise: no observations");
  const auto top = std::max_element(observations.begin(), observations.end(),
                                    [](const Observation& a, const Observation& b) { return a.beta < b.beta; });
  NoiseFitReport report;
  report.max_point = fit_noise_max_point(top->beta);
  report.max_point.residual = residual_sum(observations, report.max_point.p_hat);
  report.curve_fit = fit_noise_curve(observations);
  return report;
}

std::vector<Observation> synthetic_observations(const QuantumState& state, std::span<const SettingTriple> settings,
                                                std::optional<std::uint64_t> n_per_pair, std::uint64_t seed) {
  std::vector<Observation> out;
  out.reserve(settings.size());
  for (std::size_t k = 0; k < settings.size(); ++k) {
    double beta = 0.0;
    if (n_per_pair) {
      const std::uint64_t point_seed = Rng(seed, 0x10000 + k).next_u64();
      beta = beta_from_counts(synth_counts(state, settings[k], *n_per_pair, point_seed)).beta;
    } else {
      beta = beta_value(state, settings[k]).beta;
    }
    out.push_back({settings[k], beta});
  }
  return out;
}

}  // namespace orient
