#include "orient/bell_engine.hpp"

#include <numeric>

namespace orient {

BetaBreakdown assemble_breakdown(const std::array<double, 3>& p_same,
                                 const std::array<double, 6>& p_opp) {
  BetaBreakdown b;
  b.p_same = p_same;
  b.p_opp = p_opp;
  b.beta = std::accumulate(p_same.begin(), p_same.end(), 0.0) +
           std::accumulate(p_opp.begin(), p_opp.end(), 0.0);
  b.success_probability = success_from_beta(b.beta);
  return b;
}

double joint_probability(const QuantumState& state, Sign sa, Angle ta, Sign sb, Angle tb) {
  return trace(matmul(state.rho(), kron(projector(sa, ta), projector(sb, tb)))).real();
}

double prob_same(const QuantumState& state, Angle theta) {
  return joint_probability(state, Sign::Plus, theta, Sign::Plus, theta) +
         joint_probability(state, Sign::Minus, theta, Sign::Minus, theta);
}

double prob_opp(const QuantumState& state, Angle ti, Angle tj) {
  return joint_probability(state, Sign::Plus, ti, Sign::Minus, tj) +
         joint_probability(state, Sign::Minus, ti, Sign::Plus, tj);
}

CMatrix build_o33(const SettingTriple& settings) {
  std::array<std::array<CMatrix, 2>, 3> proj{{
      {projector(Sign::Plus, settings[0]), projector(Sign::Minus, settings[0])},
      {projector(Sign::Plus, settings[1]), projector(Sign::Minus, settings[1])},
      {projector(Sign::Plus, settings[2]), projector(Sign::Minus, settings[2])},
  }};
  CMatrix o(4);
  for (int i = 0; i < 3; ++i)
    for (int s = 0; s < 2; ++s) o += kron(proj[i][s], proj[i][s]);
  for (const auto& [i, j] : kOrderedPairs)
    for (int s = 0; s < 2; ++s) o += kron(proj[i][s], proj[j][1 - s]);
  return o;
}

BetaBreakdown beta_value(const QuantumState& state, const SettingTriple& settings) {
  std::array<double, 3> same{};
  std::array<double, 6> opp{};
  for (int i = 0; i < 3; ++i) same[i] = prob_same(state, settings[i]);
  for (std::size_t k = 0; k < kOrderedPairs.size(); ++k) {
    const auto [i, j] = kOrderedPairs[k];
    opp[k] = prob_opp(state, settings[i], settings[j]);
  }
  return assemble_breakdown(same, opp);
}

}  // namespace orient
