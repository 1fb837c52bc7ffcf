#pragma once

#include <vector>

#include "hardcore/polynomial.hpp"

namespace hardcore {

struct RootEstimate {
  Complex value;
  // |p(value)| / (1 + sum_k |c_k| |value|^k), computed in extended precision
  // at the returned (double-rounded) point.
  double residual;
};

struct RootFindOptions {
  double tolerance = 1e-12;
  int initial_bits = 128;
  // Number of times the working precision may be doubled after the initial
  // attempt before giving up.
  int max_escalations = 4;
  int max_iterations = 600;
};

// All complex roots of p (degree >= 1), found by simultaneous Aberth
// iteration with Newton-polygon starting points.  Roots are sorted by real
// part, then imaginary part.  Throws NumericalError with the best residual
// achieved if the tolerance cannot be met at the highest precision.
std::vector<RootEstimate> polynomial_roots(const Polynomial& p,
                                           const RootFindOptions& options);
std::vector<RootEstimate> polynomial_roots(const Polynomial& p,
                                           double tolerance = 1e-12);

}  // namespace hardcore
