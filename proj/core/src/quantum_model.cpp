#include "orient/quantum_model.hpp"

#include <cmath>
#include <utility>

namespace orient {

SettingTriple expand(const Parametrization& p) {
  struct Visitor {
    SettingTriple operator()(const TwoParam& t) const {
      return {{Angle(0.0), 2.0 * t.phi, 2.0 * t.theta}};
    }
    SettingTriple operator()(const OneParam& o) const {
      return {{Angle(0.0), 2.0 * o.theta, -(2.0 * o.theta)}};
    }
    SettingTriple operator()(const SettingTriple& s) const { return s; }
  };
  return std::visit(Visitor{}, p);
}

SettingTriple optimal_settings() {
  return expand(TwoParam{Angle::from_degrees(60.0), Angle::from_degrees(-60.0)});
}

std::string_view to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus: return "phi+";
    case BellLabel::PhiMinus: return "phi-";
    case BellLabel::PsiPlus: return "psi+";
    case BellLabel::PsiMinus: return "psi-";
  }
  return "?";
}

std::optional<BellLabel> parse_bell_label(std::string_view text) {
  for (BellLabel l : kBellLabels)
    if (to_string(l) == text) return l;
  return std::nullopt;
}

Ket bell_vector(BellLabel label) {
  const double h = std::sqrt(0.5);
  switch (label) {
    case BellLabel::PhiPlus: return {h, 0.0, 0.0, h};
    case BellLabel::PhiMinus: return {h, 0.0, 0.0, -h};
    case BellLabel::PsiPlus: return {0.0, h, h, 0.0};
    case BellLabel::PsiMinus: return {0.0, h, -h, 0.0};
  }
  throw InvalidInput("bell_vector: unknown label");
}

QuantumState QuantumState::from_density(const CMatrix& rho) {
  if (rho.dim() != 4) throw InvalidInput("QuantumState: density matrix must be 4x4");
  if (!rho.all_finite()) throw InvalidInput("QuantumState: non-finite entry");
  if (rho.hermiticity_defect() > kHermitianTolerance) {
    throw InvalidInput("QuantumState: density matrix is not Hermitian");
  }
  const Complex tr = trace(rho);
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw InvalidInput("QuantumState: trace is not 1");
  }
  const Spectrum spec = hermitian_eigen(rho);
  if (spec.values.back() < -kPositivityTolerance) {
    throw InvalidInput("QuantumState: density matrix is not positive semidefinite");
  }
  return QuantumState(rho);
}

QuantumState QuantumState::pure(std::span<const Complex> psi) {
  if (psi.size() != 4) throw InvalidInput("QuantumState::pure: expected a 4-vector");
  if (std::abs(norm(psi) - 1.0) > 1e-10) throw InvalidInput("QuantumState::pure: vector is not normalized");
  return from_density(outer(psi, psi));
}

double QuantumState::purity() const { return trace(matmul(rho_, rho_)).real(); }

CMatrix projector(Sign sign, Angle theta) {
  const double s = sign_value(sign);
  CMatrix n_sigma = pauli_x() * Complex(std::sin(theta.radians())) +
                    pauli_z() * Complex(std::cos(theta.radians()));
  return (CMatrix::identity(2) + n_sigma * Complex(s)) * Complex(0.5);
}

Ket polarization_ket(Sign sign, Angle two_theta) {
  const double half = 0.5 * two_theta.radians();
  if (sign == Sign::Plus) return {std::cos(half), std::sin(half)};
  return {std::sin(half), -std::cos(half)};
}

QuantumState bell_state_density(BellLabel label) {
  const Ket v = bell_vector(label);
  return QuantumState::from_density(outer(v, v));
}

QuantumState noisy_phi_plus(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("noisy_phi_plus: p must lie in [0, 1]");
  const Ket v = bell_vector(BellLabel::PhiPlus);
  return QuantumState::from_density(outer(v, v) * Complex(p) +
                                    CMatrix::identity(4) * Complex((1.0 - p) / 4.0));
}

QuantumState maximally_mixed() {
  return QuantumState::from_density(CMatrix::identity(4) * Complex(0.25));
}

QuantumState superpose(BellLabel a, BellLabel b, Complex amp_a, Complex amp_b) {
  if (a == b) throw InvalidInput("superpose: the two Bell states must differ");
  if (std::abs(std::norm(amp_a) + std::norm(amp_b) - 1.0) > 1e-10) {
    throw InvalidInput("superpose: amplitudes are not normalized");
  }
  const Ket va = bell_vector(a);
  const Ket vb = bell_vector(b);
  Ket psi(4);
  for (std::size_t i = 0; i < 4; ++i) psi[i] = amp_a * va[i] + amp_b * vb[i];
  return QuantumState::pure(psi);
}

QuantumState mix(double weight, const QuantumState& first, const QuantumState& second) {
  if (!(weight >= 0.0 && weight <= 1.0)) throw InvalidInput("mix: weight must lie in [0, 1]");
  return QuantumState::from_density(first.rho() * Complex(weight) +
                                    second.rho() * Complex(1.0 - weight));
}

}  // namespace orient
