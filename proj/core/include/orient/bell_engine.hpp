#pragma once

// Quantum scoring of the orientation game.
//
// beta = sum_i P_ii(same) + sum_{i != j} P_ij(opp), with the second sum over
// the six ordered path pairs, and the success probability is beta / 9.

#include <array>
#include <utility>

#include "orient/cmat.hpp"
#include "orient/quantum_model.hpp"

namespace orient {

/// Ordered path pairs (i, j), i != j, in the order used by BetaBreakdown::p_opp.
inline constexpr std::array<std::pair<int, int>, 6> kOrderedPairs = {
    {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};

struct BetaBreakdown {
  std::array<double, 3> p_same{};
  std::array<double, 6> p_opp{};
  double beta = 0.0;
  double success_probability = 0.0;
};

/// Sums the nine terms into beta and derives the success probability.
BetaBreakdown assemble_breakdown(const std::array<double, 3>& p_same,
                                 const std::array<double, 6>& p_opp);

/// tr{rho [A_sa(ta) (x) A_sb(tb)]}.
double joint_probability(const QuantumState& state, Sign sa, Angle ta, Sign sb, Angle tb);

/// Probability that both players read the same sign at a common angle.
double prob_same(const QuantumState& state, Angle theta);

/// Probability that the players read opposite signs at angles (ti, tj).
double prob_opp(const QuantumState& state, Angle ti, Angle tj);

/// The Bell-type operator whose expectation in any state is beta. Its
/// trace is always 18.
CMatrix build_o33(const SettingTriple& settings);

BetaBreakdown beta_value(const QuantumState& state, const SettingTriple& settings);

/// Success probability of a given beta: beta / 9.
constexpr double success_from_beta(double beta) noexcept { return beta / 9.0; }

}  // namespace orient
