#include "hardcore/regions.hpp"

#include <algorithm>
#include <cmath>

#include "hardcore/errors.hpp"

namespace hardcore {

namespace {

constexpr double kBoundarySlack = 1e-9;
constexpr double kBisectTol = 1e-12;

double arg_or_zero(Complex z) {
  if (z == Complex{0.0, 0.0}) return 0.0;
  return std::arg(z);
}

void check_half_angle(double value, const char* name) {
  if (!(value >= 0.0 && value <= M_PI / 2 + 1e-12))
    throw InputError(std::string(name) + " must lie in [0, pi/2]");
}

double point_segment_distance(Complex p, Complex a, Complex b) {
  Complex ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// t(beta) - alpha crossings over a precomputed grid, shared by membership
// queries and scans.
struct DomainTrace {
  int d;
  std::vector<double> beta, t, s;

  DomainTrace(int dd, int samples) : d(dd) {
    if (dd < 2) throw InputError("branching factor must be at least 2");
    if (samples < 2) throw InputError("need at least two samples");
    beta.resize(samples);
    t.resize(samples);
    s.resize(samples);
    for (int i = 0; i < samples; ++i) {
      beta[i] = (M_PI / 2) * i / (samples - 1);
      t[i] = t_angle(beta[i], d);
      s[i] = s_radius(beta[i], M_PI / 2, d);
    }
    // t(pi/2) = 0 exactly; a few ulp of rounding here would make the
    // crossing scan miss alpha = 0 entirely.
    t.back() = 0.0;
  }

  // Largest s over all crossings of t(beta) = alpha; negative if none.
  double max_modulus(double alpha) const {
    double best = -1.0;
    int n = static_cast<int>(beta.size());
    for (int i = 0; i < n; ++i) {
      double gi = t[i] - alpha;
      if (gi == 0.0) {
        best = std::max(best, s[i]);
        continue;
      }
      if (i + 1 >= n) continue;
      double gj = t[i + 1] - alpha;
      if (gi * gj >= 0.0) continue;
      double lo = beta[i], hi = beta[i + 1], glo = gi;
      while (hi - lo > kBisectTol) {
        double mid = 0.5 * (lo + hi);
        double gm = t_angle(mid, d) - alpha;
        if (gm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((glo < 0) == (gm < 0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      best = std::max(best, s_radius(0.5 * (lo + hi), M_PI / 2, d));
    }
    return best;
  }

  bool contains(Complex lam) const {
    double alpha = std::fabs(arg_or_zero(lam));
    if (alpha > M_PI / 2) return false;
    double m = max_modulus(alpha);
    return m >= 0.0 && std::abs(lam) <= m + kBoundarySlack;
  }
};

struct UdCurve {
  std::vector<Complex> pts;  // closed: pts.front() == pts.back()

  UdCurve(int d, int samples) {
    if (d < 2) throw InputError("branching factor must be at least 2");
    if (samples < 64) throw InputError("need at least 64 samples");
    pts.resize(samples + 1);
    for (int i = 0; i < samples; ++i)
      pts[i] = ud_boundary_point(2.0 * M_PI * i / samples, d);
    pts[samples] = pts[0];
  }

  double distance(Complex z) const {
    double best = std::abs(z - pts[0]);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      best = std::min(best, point_segment_distance(z, pts[i], pts[i + 1]));
    return best;
  }

  UdMembership membership(Complex z) const {
    UdMembership out;
    out.boundary_distance = distance(z);
    if (out.boundary_distance <= kBoundarySlack) {
      out.inside = true;
      out.on_boundary = true;
      return out;
    }
    double winding = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      winding += arg_or_zero((pts[i + 1] - z) / (pts[i] - z));
    out.inside = std::lround(winding / (2.0 * M_PI)) != 0;
    return out;
  }

  bool is_simple() const {
    // Segment pair intersection test, skipping adjacent segments.
    auto orient = [](Complex a, Complex b, Complex c) {
      double v = (b - a).real() * (c - a).imag() - (b - a).imag() * (c - a).real();
      return (v > 0.0) - (v < 0.0);
    };
    std::size_t n = pts.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;  // shared closing endpoint
        Complex a = pts[i], b = pts[i + 1], c = pts[j], e = pts[j + 1];
        if (orient(a, b, c) * orient(a, b, e) < 0 &&
            orient(c, e, a) * orient(c, e, b) < 0)
          return false;
      }
    }
    return true;
  }
};

}  // namespace

void RegionSpec::validate() const {
  // All kinds except the Shearer disk work with d = delta - 1 >= 2.
  int min_delta = kind == RegionKind::shearer ? 2 : 3;
  if (delta < min_delta)
    throw InputError("degree bound too small for this region kind");
  if (kind == RegionKind::pr_eps && !(eps > 0.0))
    throw InputError("eps must be positive");
}

const char* region_kind_name(RegionKind kind) {
  switch (kind) {
    case RegionKind::shearer: return "shearer";
    case RegionKind::pr_eps: return "pr-eps";
    case RegionKind::pr_union: return "pr";
    case RegionKind::ud: return "ud";
    case RegionKind::new_domain: return "new";
    case RegionKind::half_disk_d1: return "d1";
    case RegionKind::half_disk_d2: return "d2";
  }
  return "?";
}

double shearer_radius(int delta) {
  if (delta < 2) throw InputError("degree bound must be at least 2");
  double dm = delta - 1.0;
  return std::exp(dm * std::log(dm) - delta * std::log(double(delta)));
}

double beta_prime(double r, double angle) {
  if (r < 0.0) throw InputError("modulus must be non-negative");
  check_half_angle(angle, "angle");
  return std::atan2(r * std::sin(angle), 1.0 + r * std::cos(angle));
}

QuadraticCoeffs quadratic_coeffs(double beta, double gamma, int d) {
  check_half_angle(beta, "beta");
  check_half_angle(gamma, "gamma");
  if (d < 2) throw InputError("branching factor must be at least 2");
  double theta = beta + gamma;
  if (theta / d > M_PI / 2 + 1e-12)
    throw InputError("(beta+gamma)/d must not exceed pi/2");
  double u = std::tan(theta / d);
  QuadraticCoeffs q;
  q.u = u;
  q.a = std::sin(theta) - u * std::cos(theta);
  q.b = std::sin(beta) + std::sin(gamma) - u * (std::cos(beta) + std::cos(gamma));
  q.c = -u;
  double scale = std::max(1.0, std::fabs(u));
  if (!(q.a > 0.0) || q.b < -1e-12 * scale || !(q.c < 0.0))
    throw InvariantError("quadratic sign pattern failed: parameters outside "
                         "the certified range");
  return q;
}

double s_radius(double beta, double gamma, int d) {
  QuadraticCoeffs q = quadratic_coeffs(beta, gamma, d);
  // -2C / (B + sqrt(B^2 - 4AC)) avoids cancellation for large B.
  double disc = q.b * q.b - 4.0 * q.a * q.c;
  return -2.0 * q.c / (q.b + std::sqrt(disc));
}

double t_angle(double beta, int d) {
  double s = s_radius(beta, M_PI / 2, d);
  return M_PI / 2 - d * beta_prime(s, beta);
}

std::vector<BoundarySample> new_domain_boundary(int d, int samples, Exec exec) {
  if (d < 2) throw InputError("branching factor must be at least 2");
  if (samples < 2) throw InputError("need at least two samples");
  std::vector<BoundarySample> out(samples);
  for_each_index(samples, exec, [&](int i) {
    double beta = (M_PI / 2) * i / (samples - 1);
    out[i] = {beta, t_angle(beta, d), s_radius(beta, M_PI / 2, d)};
  });
  return out;
}

double new_domain_max_modulus(double alpha, int d, int samples) {
  return DomainTrace(d, samples).max_modulus(std::fabs(alpha));
}

bool new_domain_contains(Complex lam, int d, int samples) {
  return DomainTrace(d, samples).contains(lam);
}

bool pr_eps_contains(Complex lam, int delta, double eps) {
  if (delta < 3) throw InputError("degree bound must be at least 3");
  if (!(eps > 0.0)) throw InputError("eps must be positive");
  double d = delta - 1.0;
  return std::abs(lam) <= std::tan(M_PI / ((2.0 + eps) * d)) &&
         std::fabs(arg_or_zero(lam)) <= eps * M_PI / (2.0 * (2.0 + eps));
}

double pr_union_radius(double alpha, int delta) {
  if (delta < 3) throw InputError("degree bound must be at least 3");
  double a = std::fabs(alpha);
  if (a >= M_PI / 2) return 0.0;
  // Smallest eps whose argument bound admits alpha; the modulus bound is
  // widest there.
  double eps = 4.0 * a / (M_PI - 2.0 * a);
  return std::tan(M_PI / ((2.0 + eps) * (delta - 1.0)));
}

bool pr_contains(Complex lam, int delta) {
  double r = pr_union_radius(arg_or_zero(lam), delta);
  return std::abs(lam) <= r;
}

Complex ud_boundary_point(double theta, int d) {
  if (d < 2) throw InputError("branching factor must be at least 2");
  Complex a = std::polar(1.0, theta);
  Complex logval = double(d) * std::log(double(d)) -
                   (d + 1.0) * std::log(Complex(double(d), 0.0) + a);
  return -a * std::exp(logval);
}

UdMembership ud_membership(Complex lam, int d, int samples) {
  return UdCurve(d, samples).membership(lam);
}

bool ud_contains(Complex lam, int d, int samples) {
  return ud_membership(lam, d, samples).inside;
}

bool ud_curve_is_simple(int d, int samples) {
  return UdCurve(d, samples).is_simple();
}

CertificateMargins certificate_margins(Complex lam, double beta, double gamma,
                                       int d) {
  check_half_angle(beta, "beta");
  check_half_angle(gamma, "gamma");
  if (d < 1) throw InputError("branching factor must be at least 1");
  double alpha = arg_or_zero(lam);
  if (!(alpha > -M_PI / 2 && alpha < M_PI / 2))
    throw InputError("certificate requires arg in (-pi/2, pi/2)");
  double r = std::abs(lam);
  double bp = beta_prime(r, beta);
  double gp = beta_prime(r, gamma);
  CertificateMargins out;
  out.left_margin = alpha - (d * gp - beta);
  out.right_margin = (gamma - d * bp) - alpha;
  // Closed inequalities: points placed exactly on the boundary must pass, so
  // allow the same slack the other membership predicates use.
  out.holds = out.left_margin >= -kBoundarySlack && out.right_margin >= -kBoundarySlack;
  return out;
}

bool certificate_check(Complex lam, double beta, double gamma, int d) {
  return certificate_margins(lam, beta, gamma, d).holds;
}

ContainmentReport region_containment_scan(int d, int samples, Exec exec) {
  if (d < 2) throw InputError("branching factor must be at least 2");
  ContainmentReport report;
  if (samples < 2) return report;

  DomainTrace trace(d, std::max(samples, 512));
  UdCurve ud_curve(d, std::max(samples, 512));
  double tan_half = std::tan(M_PI / (2.0 * d));
  double shearer = shearer_radius(d + 1);
  const double fractions[] = {0.25, 0.5, 0.75, 0.9, 1.0};

  struct Row {
    long checks = 0;
    std::vector<ContainmentCounterexample> bad;
  };
  std::vector<Row> rows(samples);

  for_each_index(samples, exec, [&](int i) {
    Row& row = rows[i];
    double a = -M_PI / 2 + M_PI * i / (samples - 1);
    double dir_re = std::cos(a), dir_im = std::sin(a);
    double s_max = trace.max_modulus(std::fabs(a));
    double pr_r = pr_union_radius(a, d + 1);
    for (double f : fractions) {
      Complex on_d1 = f * 0.875 * tan_half * Complex(dir_re, dir_im);
      ++row.checks;
      if (!trace.contains(on_d1)) row.bad.push_back({"d1-within-new", on_d1});
      Complex on_pr = f * pr_r * Complex(dir_re, dir_im);
      ++row.checks;
      if (!trace.contains(on_pr)) row.bad.push_back({"pr-within-new", on_pr});
    }
    ++row.checks;
    if (!(s_max >= 0.0 && s_max <= tan_half + kBoundarySlack)) {
      Complex on_d = s_max * Complex(dir_re, dir_im);
      row.bad.push_back({"new-within-d2", on_d});
    }
    // Shearer disk within ud, over the full circle.
    double b = -M_PI + 2.0 * M_PI * i / (samples - 1);
    for (double f : fractions) {
      Complex in_shearer = f * shearer * std::polar(1.0, b);
      ++row.checks;
      if (!ud_curve.membership(in_shearer).inside)
        row.bad.push_back({"shearer-within-ud", in_shearer});
    }
  });
  for (Row& row : rows) {
    report.checks += row.checks;
    for (auto& ce : row.bad) report.counterexamples.push_back(std::move(ce));
  }
  return report;
}

double region_radius_at(const RegionSpec& spec, double alpha) {
  spec.validate();
  alpha = std::fabs(alpha);
  int d = spec.delta - 1;
  switch (spec.kind) {
    case RegionKind::shearer:
      return shearer_radius(spec.delta);
    case RegionKind::pr_eps:
      return alpha <= spec.eps * M_PI / (2.0 * (2.0 + spec.eps))
                 ? std::tan(M_PI / ((2.0 + spec.eps) * d))
                 : 0.0;
    case RegionKind::pr_union:
      return pr_union_radius(alpha, spec.delta);
    case RegionKind::ud:
      throw InputError("the ud region has no polar radius function");
    case RegionKind::new_domain:
      return std::max(0.0, new_domain_max_modulus(alpha, d));
    case RegionKind::half_disk_d1:
      return alpha <= M_PI / 2 ? 0.875 * std::tan(M_PI / (2.0 * d)) : 0.0;
    case RegionKind::half_disk_d2:
      return alpha <= M_PI / 2 ? std::tan(M_PI / (2.0 * d)) : 0.0;
  }
  throw InputError("unknown region kind");
}

bool region_contains(const RegionSpec& spec, Complex lam) {
  spec.validate();
  int d = spec.delta - 1;
  switch (spec.kind) {
    case RegionKind::shearer:
      return std::abs(lam) <= shearer_radius(spec.delta) + kBoundarySlack;
    case RegionKind::pr_eps:
      return pr_eps_contains(lam, spec.delta, spec.eps);
    case RegionKind::pr_union:
      return pr_contains(lam, spec.delta);
    case RegionKind::ud:
      return ud_contains(lam, d);
    case RegionKind::new_domain:
      return new_domain_contains(lam, d);
    case RegionKind::half_disk_d1:
    case RegionKind::half_disk_d2: {
      double alpha = std::fabs(arg_or_zero(lam));
      return alpha <= M_PI / 2 + 1e-12 &&
             std::abs(lam) <= region_radius_at(spec, 0.0) + kBoundarySlack;
    }
  }
  throw InputError("unknown region kind");
}

std::vector<PolarSample> region_boundary(const RegionSpec& spec, int samples) {
  spec.validate();
  if (samples < 2) throw InputError("need at least two samples");
  int d = spec.delta - 1;
  std::vector<PolarSample> out;

  auto sector = [&](double radius, double half_angle) {
    // Closed sector boundary: radial edge in, arc, radial edge out.
    int edge = std::max(2, samples / 8);
    int arc = std::max(2, samples - 2 * edge);
    for (int i = 0; i < edge; ++i)
      out.push_back({-half_angle, radius * i / (edge - 1)});
    for (int i = 0; i < arc; ++i)
      out.push_back({-half_angle + 2.0 * half_angle * i / (arc - 1), radius});
    for (int i = 0; i < edge; ++i)
      out.push_back({half_angle, radius * (edge - 1 - i) / (edge - 1)});
  };

  switch (spec.kind) {
    case RegionKind::shearer: {
      double r = shearer_radius(spec.delta);
      for (int i = 0; i < samples; ++i)
        out.push_back({-M_PI + 2.0 * M_PI * i / (samples - 1), r});
      break;
    }
    case RegionKind::pr_eps: {
      sector(std::tan(M_PI / ((2.0 + spec.eps) * d)),
             spec.eps * M_PI / (2.0 * (2.0 + spec.eps)));
      break;
    }
    case RegionKind::pr_union: {
      for (int i = 0; i < samples; ++i) {
        double a = -M_PI / 2 + M_PI * i / (samples - 1);
        out.push_back({a, pr_union_radius(a, spec.delta)});
      }
      break;
    }
    case RegionKind::ud: {
      for (int i = 0; i < samples; ++i) {
        Complex p = ud_boundary_point(-M_PI + 2.0 * M_PI * i / (samples - 1), d);
        out.push_back({arg_or_zero(p), std::abs(p)});
      }
      break;
    }
    case RegionKind::new_domain: {
      auto trace = new_domain_boundary(d, samples);
      for (int i = 0; i < samples; ++i)
        out.push_back({-trace[i].t_value, trace[i].s_value});
      for (int i = samples - 2; i >= 0; --i)
        out.push_back({trace[i].t_value, trace[i].s_value});
      break;
    }
    case RegionKind::half_disk_d1:
      sector(0.875 * std::tan(M_PI / (2.0 * d)), M_PI / 2);
      break;
    case RegionKind::half_disk_d2:
      sector(std::tan(M_PI / (2.0 * d)), M_PI / 2);
      break;
  }
  return out;
}

}  // namespace hardcore
