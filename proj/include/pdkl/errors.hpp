#pragma once

#include <stdexcept>
#include <string>

namespace pdkl {

/// Invalid configuration or precondition detectable before numerics run.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Point or index outside the physical domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Numerical breakdown: divergence, non-convergence, rank deficiency.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Missing or malformed on-disk artifact.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pdkl
