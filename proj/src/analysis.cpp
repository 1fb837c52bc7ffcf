#include "hardcore/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "hardcore/errors.hpp"
#include "hardcore/regions.hpp"

namespace hardcore {

namespace {

constexpr double kAgreeTol = 1e-12;
constexpr double kSlackTol = 1e-12;

// u = tan((beta+pi/2)/2) diverges as beta -> pi/2 when d = 2 and the f and g
// expressions turn into inf-minus-inf noise, so inside a narrow window we
// return their one-sided limits instead: f -> -4/pi, g -> 4/pi - 1.
constexpr double kDegenerateWindow = 1e-9;
const double kFLimitD2 = -4.0 / M_PI;
const double kGLimitD2 = 4.0 / M_PI - 1.0;

bool degenerate_corner(int d, double beta) {
  return d == 2 && beta > M_PI / 2 - kDegenerateWindow;
}

void check_args(int d, double beta) {
  if (d < 2) throw InputError("branching factor must be at least 2");
  if (!(beta >= 0.0 && beta <= M_PI / 2 + 1e-12))
    throw InputError("beta must lie in [0, pi/2]");
}

double f_form_displayed(double u, double v, double beta) {
  double sb = std::sin(beta), cb = std::cos(beta);
  double x = v / (1.0 + sb);
  return (cb + u * sb) * x * x + (1.0 + sb - u * cb) * x - u;
}

double f_form_rearranged(double u, double v, double beta) {
  double sb = std::sin(beta), cb = std::cos(beta);
  double den = (1.0 + sb) * (1.0 + sb);
  return (v - u) - (cb / den) * v * (u - v) - (sb / den) * u * v * (cb - v);
}

double g_form(double u, double v, double beta) {
  double sb = std::sin(beta), cb = std::cos(beta);
  return u - v - (sb / ((1.0 + sb) * (1.0 + sb))) * u * v * (v - cb);
}

}  // namespace

double u_value(int d, double beta) {
  check_args(d, beta);
  return std::tan((beta + M_PI / 2) / d);
}

double v_value(int d, double beta) {
  check_args(d, beta);
  return ((2.0 * beta + M_PI) / M_PI) * std::tan(M_PI / (2.0 * d));
}

double f_function(int d, double beta) {
  check_args(d, beta);
  if (degenerate_corner(d, beta)) return kFLimitD2;
  double u = u_value(d, beta), v = v_value(d, beta);
  double a = f_form_displayed(u, v, beta);
  double b = f_form_rearranged(u, v, beta);
  // Both forms lose ~u*eps to cancellation, hence the u in the scale.
  if (std::fabs(a - b) > kAgreeTol * std::max({1.0, std::fabs(a), u}))
    throw InvariantError("the two algebraic forms of f disagree");
  return a;
}

double g_function(int d, double beta) {
  check_args(d, beta);
  if (degenerate_corner(d, beta)) return kGLimitD2;
  return g_form(u_value(d, beta), v_value(d, beta), beta);
}

AnalysisPoint analysis_point(int d, double beta) {
  return {d,
          beta,
          u_value(d, beta),
          v_value(d, beta),
          f_function(d, beta),
          g_function(d, beta)};
}

RootBounds quadratic_root_bounds(double a, double b, double c) {
  if (!(a > 0.0)) throw InputError("leading coefficient must be positive");
  if (!(b > 0.0)) throw InputError("linear coefficient must be positive");
  if (!(c < 0.0)) throw InputError("constant coefficient must be negative");
  double upper = -c / b;
  return {upper - a * c * c / (b * b * b), upper};
}

SectionReport verify_inequalities(int d_min, int d_max, int grid, Exec exec) {
  if (d_min < 2 || d_max > 256)
    throw InputError("branching range must lie within [2, 256]");
  if (grid < 3) throw InputError("need at least three grid points");
  SectionReport report;
  if (d_min > d_max) return report;

  struct PerD {
    std::vector<InequalityCheck> checks;
    bool g_concave = true;
    bool s_convex = true;
  };
  int nd = d_max - d_min + 1;
  std::vector<PerD> rows(nd);

  for_each_index(nd, exec, [&](int di) {
    int d = d_min + di;
    PerD& row = rows[di];
    auto add = [&](const char* name) -> InequalityCheck& {
      row.checks.push_back({name, d, 0, 1e300});
      return row.checks.back();
    };
    InequalityCheck& sandwich = add("sandwich");
    InequalityCheck& uv = add("u-ge-v");
    InequalityCheck& fneg = add("f-nonpositive");
    InequalityCheck& fstrict = add("f-strict-interior");
    InequalityCheck& gpos = add("g-nonnegative");
    InequalityCheck& chain = add("cb-chain");
    InequalityCheck& slow = add("s-lower-bound");
    InequalityCheck& agree = add("f-two-forms");
    auto record = [](InequalityCheck& chk, double slack, double tol) {
      chk.worst_margin = std::min(chk.worst_margin, slack);
      if (slack < -tol) ++chk.violations;
    };

    std::vector<double> gvals, svals;
    gvals.reserve(grid);
    svals.reserve(grid);
    for (int i = 0; i < grid; ++i) {
      double beta = (M_PI / 2) * i / (grid - 1);
      double sb = std::sin(beta);
      QuadraticCoeffs q = quadratic_coeffs(beta, M_PI / 2, d);
      double s = s_radius(beta, M_PI / 2, d);
      double u = u_value(d, beta), v = v_value(d, beta);
      svals.push_back(s);

      record(uv, u - v, kSlackTol);
      record(slow, s - v / (1.0 + sb), kSlackTol);
      if (q.b > 1e-9 * std::max(1.0, std::fabs(q.u))) {
        RootBounds bounds = quadratic_root_bounds(q.a, q.b, q.c);
        record(sandwich, std::min(s - bounds.lower, bounds.upper - s),
               kSlackTol);
        record(chain, (-q.c / q.b) - u / (1.0 + sb), kSlackTol);
      }
      double fa, fb, gv;
      if (degenerate_corner(d, beta)) {
        fa = fb = kFLimitD2;
        gv = kGLimitD2;
      } else {
        fa = f_form_displayed(u, v, beta);
        fb = f_form_rearranged(u, v, beta);
        gv = g_form(u, v, beta);
      }
      gvals.push_back(gv);
      record(fneg, -fa, kSlackTol);
      if (d >= 3 && i > 0 && i < grid - 1) record(fstrict, -fa, 0.0);
      record(gpos, gv, kSlackTol);
      record(agree,
             kAgreeTol * std::max({1.0, std::fabs(fa), u}) - std::fabs(fa - fb),
             0.0);
    }
    for (int i = 1; i + 1 < grid; ++i) {
      if (gvals[i + 1] - 2.0 * gvals[i] + gvals[i - 1] > 1e-9)
        row.g_concave = false;
      if (svals[i + 1] - 2.0 * svals[i] + svals[i - 1] < -1e-9)
        row.s_convex = false;
    }
  });

  for (PerD& row : rows) {
    for (InequalityCheck& chk : row.checks) {
      if (chk.worst_margin == 1e300) chk.worst_margin = 0.0;  // never recorded
      report.total_violations += chk.violations;
      report.checks.push_back(std::move(chk));
    }
    report.g_concave_on_grid = report.g_concave_on_grid && row.g_concave;
    report.s_convex_on_grid = report.s_convex_on_grid && row.s_convex;
  }
  return report;
}

}  // namespace hardcore
