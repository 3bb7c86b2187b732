#pragma once

#include <stdexcept>
#include <string>

namespace mpwave {

// End states outside the rarefaction/contact/rarefaction region.
struct PatternMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iterative solver failed; carries the final residual.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& msg, double residual)
      : std::runtime_error(msg + " (residual " + std::to_string(residual) +
                           ")"),
        final_residual(residual) {}
  double final_residual = 0.0;
};

}  // namespace mpwave
