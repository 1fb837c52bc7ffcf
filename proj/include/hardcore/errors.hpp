#pragma once

#include <stdexcept>
#include <string>

namespace hardcore {

// Bad caller input: malformed files, out-of-range parameters, violated
// preconditions.  CLI maps this to exit code 2.
struct InputError : std::invalid_argument {
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A configured size or work cap would be exceeded.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// An iterative numeric routine failed to reach its target accuracy.
struct NumericalError : std::runtime_error {
  NumericalError(const std::string& msg, double achieved)
      : std::runtime_error(msg), achieved_residual(achieved) {}
  double achieved_residual;
};

// Evaluation hit a pole or a vanishing denominator.
struct SingularityError : std::runtime_error {
  SingularityError(const std::string& msg, int where)
      : std::runtime_error(msg), vertex(where) {}
  int vertex;
};

// An internal identity that must hold algebraically failed numerically.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace hardcore
