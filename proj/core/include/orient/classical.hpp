#pragma once

// Local-realistic baseline. Shared randomness only mixes deterministic
// strategies, so the deterministic maximum bounds every classical protocol.

#include <array>
#include <string>
#include <vector>

#include "orient/quantum_model.hpp"

namespace orient {

struct DeterministicStrategy {
  /// Direction taken on each of the three paths.
  std::array<Sign, 3> alice{};
  std::array<Sign, 3> bob{};

  friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

/// "++-" style rendering of three signs.
std::string to_string(const std::array<Sign, 3>& signs);

/// Number of the nine (path_a, path_b) combinations the strategy wins:
/// same direction on equal paths, opposite directions otherwise.
int classical_beta(const DeterministicStrategy& s);

struct ScoredStrategy {
  DeterministicStrategy strategy;
  int beta = 0;
};

/// All 64 deterministic strategies in a fixed order (Alice outer, Bob inner,
/// Plus before Minus, path 1 most significant).
std::vector<ScoredStrategy> enumerate_all();

struct ClassicalSummary {
  int max_beta = 0;
  int min_beta = 0;
  std::vector<DeterministicStrategy> argmax;
  std::vector<DeterministicStrategy> argmin;
};

ClassicalSummary summarize(const std::vector<ScoredStrategy>& scored);

/// max classical beta / 9, i.e. 7/9.
double classical_success_bound();

}  // namespace orient
