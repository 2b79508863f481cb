#pragma once

#include <stdexcept>
#include <string>

namespace geovqe {

/// Bad user-facing input: malformed files, inconsistent configuration,
/// out-of-range parameters. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative solver exhausted its iteration budget. Carries the best
/// estimate found so callers can still report it. CLI exit code 3.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double residual)
      : std::runtime_error(what), best_estimate(best_estimate), residual(residual) {}

  double best_estimate;
  double residual;
};

/// Filesystem failure: unreadable input or unwritable output. CLI exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace geovqe
