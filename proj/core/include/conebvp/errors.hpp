#pragma once

#include <stdexcept>
#include <string>

namespace conebvp {

/// Requested (n, k) pair or drift regime is outside the supported catalog.
struct UnsupportedProblem : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Point evaluation outside the function's domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Adaptive subdivision exceeded its depth limit without reaching tolerance.
struct QuadratureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Root bracketing failed; indicates an implementation bug, not bad input.
struct RootNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A hypothesis threshold is non-positive.
struct InvalidThreshold : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Threshold chain (p < q < r or its theorem-specific variant) violated.
struct ThresholdOrdering : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Expression or config text failed to parse; message carries position info.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Config file is structurally invalid; message names the offending field.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace conebvp
