#pragma once

#include <stdexcept>

namespace blochsim {

// Error categories map onto CLI exit codes: config 2, convergence 3,
// estimation 4. Precondition violations by callers use std::invalid_argument.

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EstimationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace blochsim
