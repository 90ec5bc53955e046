// One line per acceptance criterion, PASS or FAIL, then a tally. Exit status
// is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "orient/orient.hpp"
#include "support/checks.hpp"
#include "support/oracles.hpp"

using namespace orient;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Angle deg(double d) { return Angle::from_degrees(d); }

Verdict quantum_optimum() {
  const double closed = closed_form_two_param(deg(60), deg(-60)).lambda[0];
  const double numeric = numeric_spectrum(SettingTriple::from_degrees(0, 120, -120)).values.front();
  return {std::abs(closed - 7.5) <= 1e-9 && std::abs(numeric - 7.5) <= 1e-9,
          fmt("lambda1 closed %.15g, numeric top %.15g", closed, numeric)};
}

Verdict quantum_minimum() {
  const double l2 = closed_form_two_param(deg(60), deg(-60)).lambda[1];
  return {std::abs(l2 - 1.5) <= 1e-9, fmt("lambda2 %.15g", l2)};
}

Verdict classical_bound() {
  const auto all = enumerate_all();
  const ClassicalSummary s = summarize(all);
  const bool bound = classical_success_bound() == 7.0 / 9.0;
  return {all.size() == 64 && s.max_beta == 7 && bound,
          fmt("%zu strategies, max %d, bound %.12g", all.size(), s.max_beta, classical_success_bound())};
}

Verdict operator_trace() {
  std::mt19937_64 gen(1);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n)
    worst = std::max(worst, std::abs(trace(build_o33(oracle::random_settings(gen))) - 18.0));
  return {worst <= 1e-9, fmt("1000 triples, worst |tr - 18| %.3g", worst)};
}

Verdict closed_numeric_agreement() {
  double worst = 0.0;
  double top34 = -1.0;
  for (std::size_t i = 0; i < 181; ++i)
    for (std::size_t j = 0; j < 181; ++j) {
      const Angle phi = deg(grid_value(-90, 90, 181, i));
      const Angle theta = deg(grid_value(-90, 90, 181, j));
      const ClosedFormSpectrum cf = closed_form_two_param(phi, theta);
      worst = std::max(worst, checks::closed_vs_numeric(cf, numeric_spectrum(expand(TwoParam{phi, theta}))));
      top34 = std::max({top34, cf.lambda[2], cf.lambda[3]});
    }
  return {worst <= 1e-8 && top34 <= 7.0 + 1e-9,
          fmt("181x181 grid, worst diff %.3g, max lambda3/4 %.15g", worst, top34)};
}

Verdict bell_structure() {
  int checked = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 181; ++i)
    for (std::size_t j = 0; j < 181; ++j) {
      const auto s = checks::two_param_bell_structure(deg(grid_value(-90, 90, 181, i)),
                                                      deg(grid_value(-90, 90, 181, j)));
      checked += s.checked;
      worst = std::max(worst, s.worst_foreign);
    }
  return {checked > 0 && worst <= 1e-8, fmt("%d isolated eigenvectors, worst foreign amplitude %.3g", checked, worst)};
}

Verdict game_simulation() {
  const std::uint64_t seed = 1;
  const GameEstimate phi = run_game(bell_state_density(BellLabel::PhiPlus), optimal_settings(), 1'000'000, seed);
  const GameEstimate mixed = run_game(maximally_mixed(), optimal_settings(), 1'000'000, seed);
  const bool ok = std::abs(phi.success_rate - 5.0 / 6.0) <= 0.0015 && std::abs(mixed.success_rate - 0.5) <= 0.002;
  return {ok, fmt("seed %llu: phi+ %.6f (5/6 = %.6f), mixed %.6f", static_cast<unsigned long long>(seed),
                  phi.success_rate, 5.0 / 6.0, mixed.success_rate)};
}

Verdict noise_line() {
  double worst = 0.0;
  for (double p : {0.0, 0.2, 0.5, 0.8, 0.97, 1.0})
    worst = std::max(worst, std::abs(beta_value(noisy_phi_plus(p), optimal_settings()).beta - (4.5 + 3.0 * p)));

  const double p_true = 0.97;
  std::vector<SettingTriple> settings;
  for (std::size_t k = 0; k < 37; ++k) settings.push_back(expand(OneParam{deg(grid_value(-90, 90, 37, k))}));
  int curve_hits = 0;
  int max_point_hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto obs = synthetic_observations(noisy_phi_plus(p_true), settings, 100'000, seed);
    const NoiseFitReport rep = fit_noise(obs);
    curve_hits += std::abs(rep.curve_fit.p_hat - p_true) <= 0.01;
    max_point_hits += std::abs(rep.max_point.p_hat - p_true) <= 0.01;
  }
  return {worst <= 1e-9 && curve_hits >= 95,
          fmt("line worst %.3g; curve fit within 0.01 for %d/100 seeds (max-point %d/100)", worst, curve_hits,
              max_point_hits)};
}

Verdict headline_inversion() {
  const NoiseFit f = fit_noise_max_point(7.41);
  const double analytic = (7.41 - 4.5) / 3.0;
  return {std::abs(f.p_hat - analytic) <= 1e-12 && std::abs(f.p_hat - 0.97) <= 1e-12,
          fmt("p_hat %.15g, analytic %.15g", f.p_hat, analytic)};
}

Verdict surface_checks() {
  auto extreme = [](BellLabel label, bool want_max) {
    const Table t = sweep_surface(Family::TwoParam, 181, bell_state_density(label));
    const std::size_t col = t.column_index("beta");
    double v = t.rows.front()[col];
    for (const auto& r : t.rows) v = want_max ? std::max(v, r[col]) : std::min(v, r[col]);
    return v;
  };
  const double phi_plus = extreme(BellLabel::PhiPlus, true);
  const double phi_minus = extreme(BellLabel::PhiMinus, true);
  const double psi_plus = extreme(BellLabel::PsiPlus, true);
  const double psi_minus = extreme(BellLabel::PsiMinus, false);
  const bool ok = std::abs(phi_plus - 7.5) <= 1e-9 && std::abs(phi_minus - 7.0) <= 1e-6 && psi_plus < 7.0 &&
                  std::abs(psi_minus - 1.5) <= 1e-9;
  return {ok, fmt("max phi+ %.12g, max phi- %.12g, max psi+ %.12g, min psi- %.12g", phi_plus, phi_minus, psi_plus,
                  psi_minus)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"quantum optimum 7.5", quantum_optimum},
      {"quantum minimum 1.5", quantum_minimum},
      {"classical bound 7 (7/9)", classical_bound},
      {"operator trace 18", operator_trace},
      {"closed form matches eigensolver", closed_numeric_agreement},
      {"eigenvector Bell structure", bell_structure},
      {"game simulation success rates", game_simulation},
      {"noise line and fit round trip", noise_line},
      {"headline inversion 7.41 -> 0.97", headline_inversion},
      {"beta surface extremes per Bell state", surface_checks},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !v.pass;
    std::printf("%s %2zu %s: %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str(),
                secs);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
