#include "orient/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "orient/bell_engine.hpp"
#include "parallel.hpp"

namespace orient {

namespace {

constexpr double kRadicandSnap = 1e-12;
constexpr double kRadicandFloor = -1e-9;

// Score to maximise: the top eigenvalue for Max, minus the bottom one for Min.
double score(Objective objective, const Spectrum& s) {
  return objective == Objective::Max ? s.values.front() : -s.values.back();
}

double golden_section_max(const std::function<double(double)>& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

bool same_point(const ParamPoint& x, const ParamPoint& y, double tol) {
  return std::abs(x.phi.radians() - y.phi.radians()) <= tol &&
         std::abs(x.theta.radians() - y.theta.radians()) <= tol;
}

bool canonical_less(const ParamPoint& x, const ParamPoint& y) {
  const double kx = std::abs(x.phi.radians()) + std::abs(x.theta.radians());
  const double ky = std::abs(y.phi.radians()) + std::abs(y.theta.radians());
  if (std::abs(kx - ky) > 1e-9) return kx < ky;
  if (std::abs(x.phi.radians() - y.phi.radians()) > 1e-9) return x.phi.radians() < y.phi.radians();
  return x.theta.radians() < y.theta.radians();
}

std::string fmt_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

ClosedFormSpectrum closed_form_two_param(Angle phi, Angle theta) {
  const double f = phi.radians();
  const double t = theta.radians();
  ClosedFormSpectrum out;
  out.parametrization = TwoParam{phi, theta};
  const double cos_sum = std::cos(2.0 * t) + std::cos(2.0 * (t - f)) + std::cos(2.0 * f);
  out.lambda[0] = 6.0 - cos_sum;
  out.lambda[1] = 3.0 + cos_sum;

  // The square root amplifies rounding in the radicand near degeneracies, so
  // it is accumulated in long double.
  const long double lf = f;
  const long double lt = t;
  long double r = 15.0L + 2.0L * std::cos(4.0L * lt) - 4.0L * std::cos(2.0L * (lt - 2.0L * lf)) -
                  4.0L * std::cos(2.0L * (2.0L * lt - lf)) + 2.0L * std::cos(4.0L * (lt - lf)) +
                  2.0L * std::cos(4.0L * lf) - 4.0L * std::cos(2.0L * (lt + lf));
  if (r < kRadicandFloor) {
    throw NumericalError("closed_form_two_param: negative radicand " +
                         std::to_string(static_cast<double>(r)));
  }
  if (std::abs(r) <= kRadicandSnap) r = 0.0L;
  const double root = static_cast<double>(std::sqrt(std::max(r, 0.0L)));
  out.radicand = static_cast<double>(r);
  out.lambda[2] = 0.5 * (9.0 - root);
  out.lambda[3] = 0.5 * (9.0 + root);
  out.eigenvector = {BellLabel::PhiPlus, BellLabel::PsiMinus, std::nullopt, std::nullopt};
  return out;
}

ClosedFormSpectrum closed_form_one_param(Angle theta) {
  const double c2 = std::cos(2.0 * theta.radians());
  const double c4 = std::cos(4.0 * theta.radians());
  ClosedFormSpectrum out;
  out.parametrization = OneParam{theta};
  out.lambda = {6.0 - 2.0 * c2 - c4, 5.0 + 2.0 * c2 - c4, 4.0 - 2.0 * c2 + c4, 3.0 + 2.0 * c2 + c4};
  out.eigenvector = {BellLabel::PhiPlus, BellLabel::PsiPlus, BellLabel::PhiMinus,
                     BellLabel::PsiMinus};
  return out;
}

Spectrum numeric_spectrum(const SettingTriple& settings) {
  return hermitian_eigen(build_o33(settings));
}

BellDecomposition bell_decompose(std::span<const Complex> v) {
  if (v.size() != 4) throw InvalidInput("bell_decompose: expected a 4-vector");
  if (std::abs(norm(v) - 1.0) > 1e-10) throw InvalidInput("bell_decompose: vector is not normalized");
  BellDecomposition d;
  Ket rest(v.begin(), v.end());
  for (std::size_t k = 0; k < kBellLabels.size(); ++k) {
    const Ket b = bell_vector(kBellLabels[k]);
    d.amplitudes[k] = inner(b, v);
    for (std::size_t i = 0; i < 4; ++i) rest[i] -= d.amplitudes[k] * b[i];
  }
  d.residual = norm(rest);
  return d;
}

std::string describe(const BellDecomposition& d, double tolerance) {
  std::size_t lead = 0;
  for (std::size_t k = 1; k < 4; ++k)
    if (std::abs(d.amplitudes[k]) > std::abs(d.amplitudes[lead])) lead = k;
  if (std::norm(d.amplitudes[lead]) >= 1.0 - tolerance) return std::string(to_string(kBellLabels[lead]));

  // Remove the global phase so the leading amplitude is real and positive.
  const Complex phase = std::conj(d.amplitudes[lead]) / std::abs(d.amplitudes[lead]);
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::norm(d.amplitudes[k]) <= tolerance) continue;
    const Complex a = d.amplitudes[k] * phase;
    std::string term;
    if (std::abs(a.imag()) <= 1e-9) {
      term = fmt_number(a.real());
    } else {
      term = "(" + fmt_number(a.real()) + (a.imag() < 0 ? "-" : "+") + fmt_number(std::abs(a.imag())) + "i)";
    }
    if (!out.empty()) out += " + ";
    out += term + "*" + std::string(to_string(kBellLabels[k]));
  }
  return out;
}

SettingTriple settings_for(Family family, const ParamPoint& point) {
  if (family == Family::TwoParam) return expand(TwoParam{point.phi, point.theta});
  return expand(OneParam{point.theta});
}

double grid_value(double lo, double hi, std::size_t n, std::size_t k) {
  if (n < 2) return lo;
  if (k + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

Optimum find_optimum(Family family, Objective objective, const OptimumSearch& search) {
  if (!(search.step_deg > 0.0) || !(search.hi_deg > search.lo_deg)) {
    throw InvalidInput("find_optimum: invalid search grid");
  }
  const auto n = static_cast<std::size_t>(std::llround((search.hi_deg - search.lo_deg) / search.step_deg)) + 1;
  const bool two = family == Family::TwoParam;
  const std::size_t n_phi = two ? n : 1;

  auto value_at = [&](const ParamPoint& p) {
    return score(objective, numeric_spectrum(settings_for(family, p)));
  };
  auto point_at = [&](std::size_t i, std::size_t j) {
    return ParamPoint{two ? Angle::from_degrees(grid_value(search.lo_deg, search.hi_deg, n, i)) : Angle(0.0),
                      Angle::from_degrees(grid_value(search.lo_deg, search.hi_deg, n, j))};
  };

  std::vector<double> grid(n_phi * n);
  detail::parallel_for(n_phi, 0, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) grid[i * n + j] = value_at(point_at(i, j));
  });
  const double grid_best = *std::max_element(grid.begin(), grid.end());

  // Candidates: grid-local maxima close to the global grid maximum.
  std::vector<ParamPoint> candidates;
  for (std::size_t i = 0; i < n_phi; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = grid[i * n + j];
      if (v < grid_best - 1e-3) continue;
      bool local = true;
      for (int di = -1; di <= 1 && local; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          const auto ii = static_cast<std::ptrdiff_t>(i) + di;
          const auto jj = static_cast<std::ptrdiff_t>(j) + dj;
          if ((di == 0 && dj == 0) || ii < 0 || jj < 0 || ii >= static_cast<std::ptrdiff_t>(n_phi) ||
              jj >= static_cast<std::ptrdiff_t>(n))
            continue;
          if (grid[static_cast<std::size_t>(ii) * n + static_cast<std::size_t>(jj)] > v) {
            local = false;
            break;
          }
        }
      if (local) candidates.push_back(point_at(i, j));
    }
  }
  // A flat landscape makes every point a candidate; refining a bounded
  // sample is enough to locate the optimum value.
  if (candidates.size() > 64) candidates.resize(64);

  const double lo = Angle::from_degrees(search.lo_deg).radians();
  const double hi = Angle::from_degrees(search.hi_deg).radians();
  const double step = Angle::from_degrees(search.step_deg).radians();

  struct Refined {
    ParamPoint point;
    double value;
  };
  std::vector<Refined> refined;
  for (ParamPoint p : candidates) {
    double best = value_at(p);
    for (int round = 0; round < search.rounds; ++round) {
      for (int coord = two ? 0 : 1; coord < 2; ++coord) {
        const double x0 = coord == 0 ? p.phi.radians() : p.theta.radians();
        auto along = [&](double x) {
          ParamPoint q = p;
          (coord == 0 ? q.phi : q.theta) = Angle(x);
          return value_at(q);
        };
        const double x = golden_section_max(along, std::max(lo, x0 - step), std::min(hi, x0 + step),
                                            search.tolerance_rad);
        const double v = along(x);
        if (v >= best) {
          best = v;
          (coord == 0 ? p.phi : p.theta) = Angle(x);
        }
      }
    }
    refined.push_back({p, best});
  }

  double best_value = refined.front().value;
  for (const auto& r : refined) best_value = std::max(best_value, r.value);

  Optimum out;
  out.family = family;
  out.objective = objective;
  for (const auto& r : refined) {
    if (r.value < best_value - 1e-9) continue;
    const bool dup = std::any_of(out.equivalents.begin(), out.equivalents.end(),
                                 [&](const ParamPoint& q) { return same_point(q, r.point, 1e-6); });
    if (!dup) out.equivalents.push_back(r.point);
  }
  std::sort(out.equivalents.begin(), out.equivalents.end(), canonical_less);

  out.point = out.equivalents.front();
  out.settings = settings_for(family, out.point);
  const Spectrum spec = numeric_spectrum(out.settings);
  out.beta = objective == Objective::Max ? spec.values.front() : spec.values.back();
  out.eigenvector = objective == Objective::Max ? spec.vectors.front() : spec.vectors.back();
  out.state_label = describe(bell_decompose(out.eigenvector));
  return out;
}

Table sweep_surface(Family family, std::size_t grid_resolution, const std::optional<QuantumState>& state,
                    const SweepOptions& options) {
  if (grid_resolution < 2) throw InvalidInput("sweep_surface: grid resolution must be at least 2");
  if (!(options.hi_deg > options.lo_deg)) throw InvalidInput("sweep_surface: empty angle range");

  const bool two = family == Family::TwoParam;
  Table table;
  if (two) table.columns = {"phi_deg", "theta_deg"};
  else table.columns = {"theta_deg"};

  if (state) {
    for (const char* c : {"beta", "success_probability", "lambda_max", "lambda_min"}) table.columns.emplace_back(c);
  } else if (two) {
    for (const char* c : {"lambda1", "lambda2", "lambda3", "lambda4"}) table.columns.emplace_back(c);
  } else {
    for (const char* c : {"lambda1_phi+", "lambda2_psi+", "lambda3_phi-", "lambda4_psi-"}) table.columns.emplace_back(c);
  }
  if (!state) {
    for (const char* c : {"lambda1_numeric", "lambda2_numeric", "lambda3_numeric", "lambda4_numeric"})
      table.columns.emplace_back(c);
  }

  const std::size_t n = grid_resolution;
  const std::size_t n_phi = two ? n : 1;
  table.rows.resize(n_phi * n);

  detail::parallel_for(n_phi, options.threads, [&](std::size_t i) {
    const double phi_deg = two ? grid_value(options.lo_deg, options.hi_deg, n, i) : 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double theta_deg = grid_value(options.lo_deg, options.hi_deg, n, j);
      const ParamPoint p{Angle::from_degrees(phi_deg), Angle::from_degrees(theta_deg)};
      const SettingTriple settings = settings_for(family, p);
      std::vector<double> row;
      row.reserve(table.columns.size());
      if (two) row.push_back(phi_deg);
      row.push_back(theta_deg);
      const Spectrum numeric = numeric_spectrum(settings);
      if (state) {
        const BetaBreakdown b = beta_value(*state, settings);
        row.insert(row.end(), {b.beta, b.success_probability, numeric.values.front(), numeric.values.back()});
      } else {
        const ClosedFormSpectrum cf = two ? closed_form_two_param(p.phi, p.theta) : closed_form_one_param(p.theta);
        row.insert(row.end(), cf.lambda.begin(), cf.lambda.end());
        row.insert(row.end(), numeric.values.begin(), numeric.values.end());
      }
      table.rows[i * n + j] = std::move(row);
    }
  });
  return table;
}

}  // namespace orient
