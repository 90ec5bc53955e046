#include <doctest.h>

#include <cmath>
#include <vector>

#include "orient/game_sim.hpp"
#include "orient/spectral.hpp"

using namespace orient;

namespace {

// Counts rounded from n * p_xy; exact whenever n * p_xy is an integer.
CountTable expected_counts(const QuantumState& state, const SettingTriple& s, std::uint64_t n) {
  CountTable t;
  t.settings = s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto d = outcome_distribution(state, s[i], s[j]);
      auto c = [&](int k) { return static_cast<std::uint64_t>(std::llround(static_cast<double>(n) * d[k])); };
      t.at(i, j) = {c(0), c(1), c(2), c(3)};
    }
  return t;
}

std::vector<SettingTriple> one_param_sweep(double step_deg) {
  std::vector<SettingTriple> out;
  for (double t = -90.0; t <= 90.0 + 1e-9; t += step_deg) out.push_back(expand(OneParam{Angle::from_degrees(t)}));
  return out;
}

}  // namespace

TEST_CASE("sample_trial records obey the success rule") {
  Rng rng(7);
  const QuantumState phi = bell_state_density(BellLabel::PhiPlus);
  const SettingTriple opt = optimal_settings();
  std::array<int, 9> path_hits{};
  for (int n = 0; n < 20000; ++n) {
    const TrialRecord r = sample_trial(phi, opt, rng);
    REQUIRE(r.path_a >= 0);
    REQUIRE(r.path_a < 3);
    REQUIRE(r.path_b >= 0);
    REQUIRE(r.path_b < 3);
    CHECK(r.success == (r.path_a == r.path_b ? r.outcome_a == r.outcome_b : r.outcome_a != r.outcome_b));
    // phi+ is perfectly correlated at equal settings.
    if (r.path_a == r.path_b) CHECK(r.success);
    ++path_hits[r.path_a * 3 + r.path_b];
  }
  for (int h : path_hits) CHECK(std::abs(h - 20000.0 / 9.0) < 5.0 * std::sqrt(20000.0 / 9.0));
}

TEST_CASE("sample_trial is deterministic per stream") {
  const QuantumState s = noisy_phi_plus(0.7);
  Rng a(123, 4);
  Rng b(123, 4);
  Rng c(123, 5);
  bool any_diff = false;
  for (int n = 0; n < 1000; ++n) {
    const TrialRecord ra = sample_trial(s, optimal_settings(), a);
    CHECK(ra == sample_trial(s, optimal_settings(), b));
    any_diff |= !(ra == sample_trial(s, optimal_settings(), c));
  }
  CHECK(any_diff);
}

TEST_CASE("run_game examples") {
  const SettingTriple opt = optimal_settings();
  const GameEstimate phi = run_game(bell_state_density(BellLabel::PhiPlus), opt, 1'000'000, 0);
  CHECK(phi.trials == 1'000'000);
  CHECK(std::abs(phi.standard_error - 0.000373) < 2e-5);
  CHECK(std::abs(phi.success_rate - 5.0 / 6.0) <= 4.0 * phi.standard_error);

  const GameEstimate noisy = run_game(noisy_phi_plus(0.98), opt, 1'000'000, 1);
  CHECK(std::abs(noisy.success_rate - (4.5 + 3 * 0.98) / 9.0) <= 4.0 * noisy.standard_error);

  const GameEstimate mixed = run_game(maximally_mixed(), opt, 1'000'000, 2);
  CHECK(std::abs(mixed.success_rate - 0.5) <= 4.0 * mixed.standard_error);

  CHECK_THROWS_AS(run_game(maximally_mixed(), opt, 0, 0), InvalidInput);
}

TEST_CASE("run_game determinism is independent of thread count") {
  const QuantumState s = noisy_phi_plus(0.9);
  const auto a = run_game(s, optimal_settings(), 300'000, 42, {.threads = 1});
  const auto b = run_game(s, optimal_settings(), 300'000, 42, {.threads = 4});
  const auto c = run_game(s, optimal_settings(), 300'000, 42);
  CHECK(a.successes == b.successes);
  CHECK(a.successes == c.successes);
  CHECK(run_game(s, optimal_settings(), 300'000, 43).successes != a.successes);
}

TEST_CASE("run_game estimator consistency over seeds") {
  const QuantumState s = noisy_phi_plus(0.8);
  const SettingTriple settings = SettingTriple::from_degrees(0, 100, -70);
  const double target = beta_value(s, settings).success_probability;
  int within = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto e = run_game(s, settings, 100'000, seed);
    within += std::abs(e.success_rate - target) <= 4.0 * e.standard_error;
  }
  CHECK(within >= 99);
}

TEST_CASE("synth_counts examples") {
  const SettingTriple opt = optimal_settings();
  const CountTable phi = synth_counts(bell_state_density(BellLabel::PhiPlus), opt, 100'000, 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(phi.at(i, i).pm == 0);
    CHECK(phi.at(i, i).mp == 0);
    for (int j = 0; j < 3; ++j) CHECK(phi.at(i, j).total() == 100'000);
  }

  const CountTable mixed = synth_counts(maximally_mixed(), opt, 1'000'000, 9);
  const double sigma = std::sqrt(1e6 * 0.25 * 0.75);
  for (const auto& c : mixed.cells)
    for (std::uint64_t v : {c.pp, c.pm, c.mp, c.mm}) CHECK(std::abs(static_cast<double>(v) - 250'000.0) <= 3.0 * sigma + 1.0);

  const CountTable again = synth_counts(maximally_mixed(), opt, 1'000'000, 9);
  CHECK(again.cells == mixed.cells);
  CHECK_THROWS_AS(synth_counts(maximally_mixed(), opt, 0, 0), InvalidInput);
}

TEST_CASE("beta_from_counts") {
  const SettingTriple opt = optimal_settings();
  const QuantumState phi = bell_state_density(BellLabel::PhiPlus);
  const BetaBreakdown exact = beta_from_counts(expected_counts(phi, opt, 1'000'000));
  CHECK(std::abs(exact.beta - 7.5) <= 1e-12);
  CHECK(std::abs(exact.beta - beta_value(phi, opt).beta) <= 1e-12);

  // p = 0.5 gives cell probabilities in multiples of 1/16.
  const QuantumState half = noisy_phi_plus(0.5);
  CHECK(std::abs(beta_from_counts(expected_counts(half, opt, 1'600'000)).beta - beta_value(half, opt).beta) <= 1e-12);

  CountTable uniform;
  for (auto& c : uniform.cells) c = {10, 10, 10, 10};
  CHECK(std::abs(beta_from_counts(uniform).beta - 4.5) <= 1e-15);

  const BetaBreakdown sampled = beta_from_counts(synth_counts(phi, opt, 1'000'000, 11));
  CHECK(std::abs(sampled.beta - 7.5) <= 0.01);

  CountTable gap = uniform;
  gap.at(1, 2) = {};
  CHECK_THROWS_AS(beta_from_counts(gap), InvalidInput);
}

TEST_CASE("noise fit max-point inversion") {
  CHECK(fit_noise_max_point(7.5).p_hat == 1.0);
  CHECK(std::abs(fit_noise_max_point(7.41).p_hat - 0.97) <= 1e-12);
  CHECK(fit_noise_max_point(9.0).p_hat == 1.0);
  CHECK(fit_noise_max_point(9.0).residual > 0.0);
  CHECK(fit_noise_max_point(3.0).p_hat == 0.0);
  CHECK_THROWS_AS(fit_noise({}), InvalidInput);
}

TEST_CASE("noise fit round trip on noiseless sweeps") {
  const auto sweep = one_param_sweep(5.0);
  for (double p : {0.0, 0.5, 0.9, 0.98, 1.0}) {
    const auto obs = synthetic_observations(noisy_phi_plus(p), sweep, std::nullopt, 0);
    const NoiseFitReport r = fit_noise(obs);
    CHECK(std::abs(r.curve_fit.p_hat - p) <= 1e-9);
    CHECK(r.curve_fit.residual <= 1e-18);
    CHECK(std::abs(r.max_point.p_hat - p) <= 1e-9);
  }
}

TEST_CASE("noise fit from sampled counts") {
  const auto sweep = one_param_sweep(15.0);
  int within = 0;
  const int seeds = 20;
  for (int seed = 0; seed < seeds; ++seed) {
    const auto obs = synthetic_observations(noisy_phi_plus(0.98), sweep, 100'000, static_cast<std::uint64_t>(seed));
    within += std::abs(fit_noise(obs).curve_fit.p_hat - 0.98) <= 0.01;
  }
  CHECK(within >= 19);
}
