#pragma once

// Command-line front end. `run` is the whole program minus process plumbing,
// so tests can drive it in-process with string streams.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orient/quantum_model.hpp"

namespace orient::cli {

enum ExitCode : int { kOk = 0, kRuntimeError = 1, kUsageError = 2 };

/// Bad flag combination or out-of-range value; maps to kUsageError.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Output could not be written; maps to kRuntimeError.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accepted forms: phi+ | phi- | psi+ | psi- | mixed | noisy:P |
/// superpose:A,B,AMP (AMP|A> + sqrt(1-AMP^2)|B>, AMP in [0, 1]).
QuantumState parse_state(std::string_view spec);

/// Runs one command. `args` excludes the program name. Datasets go to
/// `out` (or the --out file); diagnostics and, when the dataset occupies
/// `out`, the summary go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orient::cli
