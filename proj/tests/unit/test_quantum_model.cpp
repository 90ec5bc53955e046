#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "orient/quantum_model.hpp"
#include "support/oracles.hpp"

using namespace orient;

TEST_CASE("projector examples") {
  CHECK(max_abs_diff(projector(Sign::Plus, Angle(0.0)), CMatrix::diagonal({1.0, 0.0})) <= 1e-15);
  CHECK(max_abs_diff(projector(Sign::Minus, Angle(0.0)), CMatrix::diagonal({0.0, 1.0})) <= 1e-15);
  const CMatrix half{{0.5, 0.5}, {0.5, 0.5}};
  CHECK(max_abs_diff(projector(Sign::Plus, Angle(std::numbers::pi / 2)), half) <= 1e-15);
}

TEST_CASE("projector properties") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  const CMatrix zero(2);
  for (int n = 0; n < 1000; ++n) {
    const Angle t(u(gen));
    const CMatrix p = projector(Sign::Plus, t);
    const CMatrix m = projector(Sign::Minus, t);
    CHECK(max_abs_diff(p + m, CMatrix::identity(2)) <= 1e-15);
    CHECK(max_abs_diff(p * p, p) <= 1e-12);
    CHECK(max_abs_diff(m * m, m) <= 1e-12);
    CHECK(max_abs_diff(p * m, zero) <= 1e-12);
    CHECK(p.hermiticity_defect() == 0.0);
  }
}

TEST_CASE("polarization kets") {
  const Ket h = polarization_ket(Sign::Plus, Angle(0.0));
  CHECK(h[0] == Complex(1.0));
  CHECK(h[1] == Complex(0.0));
  const Ket vneg = polarization_ket(Sign::Minus, Angle(0.0));
  CHECK(vneg[0] == Complex(0.0));
  CHECK(vneg[1] == Complex(-1.0));
  const Ket d = polarization_ket(Sign::Plus, Angle(std::numbers::pi / 2));
  CHECK(std::abs(d[0] - std::cos(std::numbers::pi / 4)) < 1e-15);
  CHECK(std::abs(d[1] - std::sin(std::numbers::pi / 4)) < 1e-15);

  // The outer products reproduce the projectors, fixing the half-angle convention.
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(-M_PI, M_PI);
  for (int n = 0; n < 100; ++n) {
    const double t = u(gen);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const Ket k = polarization_ket(s, Angle(2.0 * t));
      CHECK(std::abs(norm(k) - 1.0) <= 1e-15);
      CHECK(max_abs_diff(outer(k, k), projector(s, Angle(2.0 * t))) <= 1e-12);
    }
  }
}

TEST_CASE("Bell densities") {
  const CMatrix phi = bell_state_density(BellLabel::PhiPlus).rho();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const bool corner = (r == 0 || r == 3) && (c == 0 || c == 3);
      CHECK(std::abs(phi(r, c) - (corner ? 0.5 : 0.0)) <= 1e-15);
    }
  const CMatrix psi = bell_state_density(BellLabel::PsiMinus).rho();
  CHECK(std::abs(psi(1, 1) - 0.5) <= 1e-15);
  CHECK(std::abs(psi(2, 2) - 0.5) <= 1e-15);
  CHECK(std::abs(psi(1, 2) + 0.5) <= 1e-15);
  CHECK(std::abs(psi(2, 1) + 0.5) <= 1e-15);
  CHECK(std::abs(psi(0, 0)) == 0.0);

  for (BellLabel a : kBellLabels) {
    const QuantumState sa = bell_state_density(a);
    CHECK(std::abs(trace(sa.rho()) - 1.0) <= 1e-15);
    for (BellLabel b : kBellLabels) {
      const double overlap = trace(sa.rho() * bell_state_density(b).rho()).real();
      CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) <= 1e-12);
    }
  }
}

TEST_CASE("Bell label round trip") {
  for (BellLabel l : kBellLabels) CHECK(parse_bell_label(to_string(l)) == l);
  CHECK_FALSE(parse_bell_label("phi").has_value());
}

TEST_CASE("noisy phi+ family") {
  CHECK(max_abs_diff(noisy_phi_plus(1.0).rho(), bell_state_density(BellLabel::PhiPlus).rho()) <= 1e-15);
  CHECK(max_abs_diff(noisy_phi_plus(0.0).rho(), CMatrix::identity(4) * Complex(0.25)) <= 1e-15);
  const QuantumState fitted = noisy_phi_plus(0.98);
  CHECK(std::abs(fitted.rho()(0, 3) - 0.49) <= 1e-15);

  for (double p : {0.0, 0.1, 0.5, 0.98, 1.0}) {
    const Spectrum s = hermitian_eigen(noisy_phi_plus(p).rho());
    CHECK(std::abs(s.values[0] - (1.0 + 3.0 * p) / 4.0) <= 1e-10);
    for (int k = 1; k < 4; ++k) CHECK(std::abs(s.values[k] - (1.0 - p) / 4.0) <= 1e-10);
  }
  CHECK_THROWS_AS(noisy_phi_plus(-0.01), InvalidInput);
  CHECK_THROWS_AS(noisy_phi_plus(1.01), InvalidInput);
  CHECK_THROWS_AS(noisy_phi_plus(std::nan("")), InvalidInput);
}

TEST_CASE("superpose") {
  CHECK(max_abs_diff(superpose(BellLabel::PsiPlus, BellLabel::PhiMinus, 1.0, 0.0).rho(),
                     bell_state_density(BellLabel::PsiPlus).rho()) <= 1e-15);
  CHECK(max_abs_diff(superpose(BellLabel::PsiPlus, BellLabel::PhiMinus, 0.0, 1.0).rho(),
                     bell_state_density(BellLabel::PhiMinus).rho()) <= 1e-15);
  const double h = std::sqrt(0.5);
  const QuantumState s = superpose(BellLabel::PsiPlus, BellLabel::PhiMinus, h, h);
  CHECK(std::abs(trace(s.rho()) - 1.0) <= 1e-12);
  CHECK(std::abs(s.purity() - 1.0) <= 1e-12);
  CHECK_THROWS_AS(superpose(BellLabel::PsiPlus, BellLabel::PhiMinus, 1.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(superpose(BellLabel::PsiPlus, BellLabel::PsiPlus, 1.0, 0.0), InvalidInput);
}

TEST_CASE("QuantumState validation") {
  CMatrix not_unit = CMatrix::identity(4);
  CHECK_THROWS_AS(QuantumState::from_density(not_unit), InvalidInput);
  CHECK_THROWS_AS(QuantumState::from_density(CMatrix::identity(2)), InvalidInput);
  // Unit trace but with a negative eigenvalue.
  CHECK_THROWS_AS(QuantumState::from_density(CMatrix::diagonal({1.2, -0.2, 0.0, 0.0})), InvalidInput);
  CMatrix skew = CMatrix::identity(4) * Complex(0.25);
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(QuantumState::from_density(skew), InvalidInput);
}

TEST_CASE("parametrization expansion") {
  const SettingTriple two = expand(TwoParam{Angle::from_degrees(60), Angle::from_degrees(-60)});
  CHECK(two[0].degrees() == 0.0);
  CHECK(two[1].degrees() == doctest::Approx(120.0));
  CHECK(two[2].degrees() == doctest::Approx(-120.0));
  const SettingTriple one = expand(OneParam{Angle::from_degrees(30)});
  CHECK(one[1].degrees() == doctest::Approx(60.0));
  CHECK(one[2].degrees() == doctest::Approx(-60.0));
  const SettingTriple raw = SettingTriple::from_degrees(1, 2, 3);
  const SettingTriple same = expand(raw);
  for (std::size_t i = 0; i < 3; ++i) CHECK(same[i].radians() == raw[i].radians());
}
