#pragma once

#include <string>
#include <vector>

#include "hardcore/parallel.hpp"

namespace hardcore {

// Scalar machinery behind the boundary lower bound: for gamma = pi/2,
//   u = tan((beta + pi/2)/d),   v = ((2*beta + pi)/pi) * tan(pi/(2d)),
// and the correction terms f (must be <= 0) and g (must be >= 0) that
// together pin s(beta, pi/2) above v/(1 + sin beta).
struct AnalysisPoint {
  int d;
  double beta;
  double u;
  double v;
  double f_value;
  double g_value;
};

AnalysisPoint analysis_point(int d, double beta);

double u_value(int d, double beta);
double v_value(int d, double beta);
double f_function(int d, double beta);
double g_function(int d, double beta);

// (-c/b - a c^2/b^3, -c/b) bracketing the positive root of a x^2 + b x + c
// when a > 0, b > 0, c < 0.
struct RootBounds {
  double lower;
  double upper;
};

RootBounds quadratic_root_bounds(double a, double b, double c);

struct InequalityCheck {
  std::string name;
  int d;
  long violations;
  double worst_margin;  // most negative slack seen (>= 0 means clean)
};

struct SectionReport {
  std::vector<InequalityCheck> checks;
  long total_violations = 0;
  // Conjectured shape statements, tested by second differences and reported
  // only; they gate nothing.
  bool g_concave_on_grid = true;
  bool s_convex_on_grid = true;
};

// Per d in [d_min, d_max] and per beta grid point: sandwich bounds bracket
// the positive root where b is positive, u >= v, f <= 0 (strict at interior
// points for d >= 3), g >= 0, the -c/b >= u/(1+sin beta) >= v/(1+sin beta)
// chain, s >= v/(1+sin beta), and agreement of the two algebraic forms of f.
SectionReport verify_inequalities(int d_min, int d_max, int grid,
                                  Exec exec = Exec::serial);

}  // namespace hardcore
