#pragma once

// Spectra of the Bell-type operator O33: the closed-form eigenvalues of the
// two- and one-parameter setting families, the numeric route through the
// Jacobi solver, Bell-basis classification of eigenvectors, extremal search
// and tabulated sweeps.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orient/cmat.hpp"
#include "orient/quantum_model.hpp"
#include "orient/table.hpp"

namespace orient {

struct ClosedFormSpectrum {
  /// Eigenvalues in closed-form order (not sorted).
  std::array<double, 4> lambda{};
  Parametrization parametrization;
  /// The Bell eigenvector paired with each eigenvalue where it is fixed.
  /// Two-parameter family: {phi+, psi-, -, -}. One-parameter family: all four.
  std::array<std::optional<BellLabel>, 4> eigenvector{};
  /// Shared radicand of lambda3/lambda4 (two-parameter family only).
  double radicand = 0.0;
};

/// Closed-form spectrum for settings (0, 2*phi, 2*theta).
///
/// The radicand is evaluated in extended precision; values within 1e-12 of
/// zero are snapped to zero. A radicand below -1e-9 throws NumericalError.
ClosedFormSpectrum closed_form_two_param(Angle phi, Angle theta);

/// Closed-form spectrum for settings (0, 2*theta, -2*theta), paired with
/// phi+, psi+, phi-, psi- respectively.
ClosedFormSpectrum closed_form_one_param(Angle theta);

/// hermitian_eigen(build_o33(settings)).
Spectrum numeric_spectrum(const SettingTriple& settings);

struct BellDecomposition {
  /// Amplitudes <b|v> in kBellLabels order: phi+, phi-, psi+, psi-.
  std::array<Complex, 4> amplitudes{};
  /// Norm of the part of v outside the Bell span (a numerical check only).
  double residual = 0.0;

  Complex amplitude(BellLabel label) const { return amplitudes[static_cast<std::size_t>(label)]; }
  double weight(BellLabel label) const { return std::norm(amplitude(label)); }
};

/// Throws InvalidInput unless `v` is a unit 4-vector (within 1e-10).
BellDecomposition bell_decompose(std::span<const Complex> v);

/// "phi+" when a single Bell state carries all the weight (to `tolerance`),
/// otherwise a signed superposition such as "0.707107*psi+ + 0.707107*phi-".
std::string describe(const BellDecomposition& d, double tolerance = 1e-8);

enum class Family { TwoParam, OneParam };
enum class Objective { Max, Min };

/// A point of a setting family; `phi` is unused for Family::OneParam.
struct ParamPoint {
  Angle phi;
  Angle theta;
};

SettingTriple settings_for(Family family, const ParamPoint& point);

struct OptimumSearch {
  double lo_deg = -90.0;
  double hi_deg = 90.0;
  double step_deg = 0.5;
  /// Golden-section bracket width at which refinement stops (radians).
  double tolerance_rad = 1e-8;
  /// Rounds of per-coordinate refinement.
  int rounds = 3;
};

struct Optimum {
  Family family = Family::TwoParam;
  Objective objective = Objective::Max;
  /// Canonical representative: smallest |phi|+|theta|, then lexicographic.
  ParamPoint point;
  SettingTriple settings;
  /// Extremal eigenvalue of O33 at `settings`: the extremal beta.
  double beta = 0.0;
  Ket eigenvector;
  std::string state_label;
  /// Every symmetry-equivalent optimum found, canonical first.
  std::vector<ParamPoint> equivalents;
};

/// Grid search of the extremal eigenvalue of O33 over the family, followed
/// by per-coordinate golden-section refinement of every grid candidate.
Optimum find_optimum(Family family, Objective objective, const OptimumSearch& search = {});

struct SweepOptions {
  double lo_deg = -90.0;
  double hi_deg = 90.0;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Tabulates the family over a `grid_resolution`-point grid per axis.
///
/// Without a state the rows carry the closed-form eigenvalues next to the
/// sorted numeric ones; with a state they carry beta, the success
/// probability and the extreme eigenvalues of O33. Rows are ordered by grid
/// index (phi outer, theta inner) independent of the thread count.
Table sweep_surface(Family family, std::size_t grid_resolution,
                    const std::optional<QuantumState>& state, const SweepOptions& options = {});

/// The k-th of `n` evenly spaced grid values on [lo, hi].
double grid_value(double lo, double hi, std::size_t n, std::size_t k);

}  // namespace orient
