#pragma once

// Reference computations that deliberately avoid the library's projector,
// Kronecker and trace code paths. They build analyser kets from half angles
// and evaluate <v|rho|v> directly.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "orient/cmat.hpp"
#include "orient/quantum_model.hpp"

namespace oracle {

using C = std::complex<double>;

/// Analyser ket for outcome + (cos h, sin h) or - (sin h, -cos h), h = angle/2.
inline std::array<double, 2> analyser(bool plus, double angle) {
  const double h = 0.5 * angle;
  if (plus) return {std::cos(h), std::sin(h)};
  return {std::sin(h), -std::cos(h)};
}

/// <a (x) b | rho | a (x) b> with the product ket assembled by hand.
inline double joint(const orient::CMatrix& rho, bool plus_a, double ta, bool plus_b, double tb) {
  const auto a = analyser(plus_a, ta);
  const auto b = analyser(plus_b, tb);
  const std::array<double, 4> v = {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
  C s = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s += v[r] * rho(r, c) * v[c];
  return s.real();
}

inline double beta(const orient::CMatrix& rho, const std::array<double, 3>& t) {
  double b = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) b += joint(rho, true, t[i], true, t[j]) + joint(rho, false, t[i], false, t[j]);
      else b += joint(rho, true, t[i], false, t[j]) + joint(rho, false, t[i], true, t[j]);
    }
  return b;
}

/// beta(phi+) at settings t: 3 + sum over ordered pairs of sin^2((ti - tj)/2).
inline double beta_phi_plus_analytic(const std::array<double, 3>& t) {
  double b = 3.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) b += std::pow(std::sin(0.5 * (t[i] - t[j])), 2);
  return b;
}

inline std::array<double, 3> radians(const orient::SettingTriple& s) {
  return {s[0].radians(), s[1].radians(), s[2].radians()};
}

/// Random convex mixture of the four Bell projectors.
inline orient::QuantumState random_bell_mixture(std::mt19937_64& gen) {
  std::gamma_distribution<double> g(1.0, 1.0);
  std::array<double, 4> w{};
  double total = 0.0;
  for (auto& x : w) total += (x = g(gen));
  orient::CMatrix rho(4);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto v = orient::bell_vector(orient::kBellLabels[k]);
    rho += orient::outer(v, v) * C(w[k] / total);
  }
  return orient::QuantumState::from_density(rho);
}

/// Random pure two-qubit state (not restricted to the Bell span).
inline orient::QuantumState random_pure(std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  orient::Ket v(4);
  for (auto& x : v) x = C(n(gen), n(gen));
  const double len = orient::norm(v);
  for (auto& x : v) x /= len;
  return orient::QuantumState::pure(v);
}

inline orient::SettingTriple random_settings(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-M_PI, M_PI);
  return {{orient::Angle(u(gen)), orient::Angle(u(gen)), orient::Angle(u(gen))}};
}

inline orient::CMatrix random_hermitian(std::mt19937_64& gen, std::size_t dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  orient::CMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    m(r, r) = n(gen);
    for (std::size_t c = r + 1; c < dim; ++c) {
      m(r, c) = C(n(gen), n(gen));
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

}  // namespace oracle
