#pragma once

// Measurement geometry and two-qubit states.
//
// Conventions used throughout the library:
//  * Measurement directions lie in the x-z plane: n(t) = (sin t, 0, cos t),
//    so t = 0 measures sigma_z.
//  * The two-qubit product basis is |HH>, |HV>, |VH>, |VV>, left factor Alice.
//  * Angles are radians internally; degrees appear only at I/O boundaries.

#include <array>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "orient/cmat.hpp"

namespace orient {

enum class Sign { Plus, Minus };

constexpr Sign flip(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr int sign_value(Sign s) noexcept { return s == Sign::Plus ? 1 : -1; }
constexpr char sign_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

/// A measurement angle. Periodicity is left to the trigonometry.
class Angle {
 public:
  constexpr Angle() = default;
  constexpr explicit Angle(double radians) : radians_(radians) {}

  static constexpr Angle from_degrees(double deg) { return Angle(deg * std::numbers::pi / 180.0); }

  constexpr double radians() const noexcept { return radians_; }
  constexpr double degrees() const noexcept { return radians_ * 180.0 / std::numbers::pi; }

  friend constexpr Angle operator-(Angle a) { return Angle(-a.radians_); }
  friend constexpr Angle operator*(double k, Angle a) { return Angle(k * a.radians_); }

 private:
  double radians_ = 0.0;
};

/// The three measurement angles shared by both players, one per path.
struct SettingTriple {
  std::array<Angle, 3> angles{};

  const Angle& operator[](std::size_t i) const { return angles[i]; }
  static SettingTriple from_degrees(double a, double b, double c) {
    return {{Angle::from_degrees(a), Angle::from_degrees(b), Angle::from_degrees(c)}};
  }
};

/// (0, 2*phi, 2*theta)
struct TwoParam {
  Angle phi;
  Angle theta;
};

/// (0, 2*theta, -2*theta)
struct OneParam {
  Angle theta;
};

using Parametrization = std::variant<TwoParam, OneParam, SettingTriple>;

SettingTriple expand(const Parametrization& p);

/// The settings that saturate the quantum maximum 7.5: (0, 120, -120) degrees.
SettingTriple optimal_settings();

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellLabel, 4> kBellLabels = {BellLabel::PhiPlus, BellLabel::PhiMinus,
                                                         BellLabel::PsiPlus, BellLabel::PsiMinus};

/// "phi+", "phi-", "psi+", "psi-".
std::string_view to_string(BellLabel label);
std::optional<BellLabel> parse_bell_label(std::string_view text);

/// Unit Bell vector in the HV product basis.
Ket bell_vector(BellLabel label);

/// A validated two-qubit density matrix: Hermitian, unit trace and positive
/// semidefinite.
class QuantumState {
 public:
  static constexpr double kHermitianTolerance = 1e-10;
  static constexpr double kTraceTolerance = 1e-10;
  static constexpr double kPositivityTolerance = 1e-9;

  /// Validates and wraps `rho`; throws InvalidInput on any violated invariant.
  static QuantumState from_density(const CMatrix& rho);
  /// |psi><psi| for a unit 4-vector.
  static QuantumState pure(std::span<const Complex> psi);

  const CMatrix& rho() const noexcept { return rho_; }
  double purity() const;

 private:
  explicit QuantumState(CMatrix rho) : rho_(std::move(rho)) {}
  CMatrix rho_;
};

/// A_{+/-}(t) = (I +/- n(t).sigma) / 2.
CMatrix projector(Sign sign, Angle theta);

/// Polarization analyser kets: |s(2t)> = cos t|H> + sin t|V> for Plus and
/// |s_perp(2t)> = sin t|H> - cos t|V> for Minus. `two_theta` is the full
/// measurement angle 2t.
Ket polarization_ket(Sign sign, Angle two_theta);

QuantumState bell_state_density(BellLabel label);

/// p|Phi+><Phi+| + (1-p) I/4 for p in [0, 1].
QuantumState noisy_phi_plus(double p);

QuantumState maximally_mixed();

/// Pure state amp_a|a> + amp_b|b>; amplitudes must be normalized within 1e-10.
QuantumState superpose(BellLabel a, BellLabel b, Complex amp_a, Complex amp_b);

/// weight * first + (1 - weight) * second, weight in [0, 1].
QuantumState mix(double weight, const QuantumState& first, const QuantumState& second);

}  // namespace orient
