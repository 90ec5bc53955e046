#include "orient/classical.hpp"

#include <algorithm>

namespace orient {

std::string to_string(const std::array<Sign, 3>& signs) {
  std::string s;
  for (Sign x : signs) s += sign_char(x);
  return s;
}

int classical_beta(const DeterministicStrategy& s) {
  int score = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const bool same = s.alice[i] == s.bob[j];
      score += (i == j) ? same : !same;
    }
  return score;
}

std::vector<ScoredStrategy> enumerate_all() {
  auto signs_of = [](int code) {
    std::array<Sign, 3> out{};
    for (int k = 0; k < 3; ++k) out[k] = ((code >> (2 - k)) & 1) ? Sign::Minus : Sign::Plus;
    return out;
  };
  std::vector<ScoredStrategy> all;
  all.reserve(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      DeterministicStrategy s{signs_of(a), signs_of(b)};
      all.push_back({s, classical_beta(s)});
    }
  return all;
}

ClassicalSummary summarize(const std::vector<ScoredStrategy>& scored) {
  ClassicalSummary out;
  if (scored.empty()) return out;
  const auto [lo, hi] = std::minmax_element(scored.begin(), scored.end(),
                                            [](const auto& x, const auto& y) { return x.beta < y.beta; });
  out.min_beta = lo->beta;
  out.max_beta = hi->beta;
  for (const auto& s : scored) {
    if (s.beta == out.max_beta) out.argmax.push_back(s.strategy);
    if (s.beta == out.min_beta) out.argmin.push_back(s.strategy);
  }
  return out;
}

double classical_success_bound() { return summarize(enumerate_all()).max_beta / 9.0; }

}  // namespace orient
