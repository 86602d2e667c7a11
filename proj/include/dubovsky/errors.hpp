#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dubovsky {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid scenario, grid, or configuration value.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the explicit stepper produces a non-finite or runaway state.
/// Carries the index of the offending node and the last finite state.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(std::size_t step, double last_x, double last_y);

  std::size_t step() const noexcept { return step_; }
  double last_x() const noexcept { return last_x_; }
  double last_y() const noexcept { return last_y_; }

 private:
  std::size_t step_;
  double last_x_;
  double last_y_;
};

}  // namespace dubovsky
