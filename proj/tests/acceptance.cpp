// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "hardcore/analysis.hpp"
#include "hardcore/dynamics.hpp"
#include "hardcore/errors.hpp"
#include "hardcore/graph.hpp"
#include "hardcore/indepoly.hpp"
#include "hardcore/regions.hpp"
#include "hardcore/roots.hpp"
#include "hardcore/verify.hpp"

using namespace hardcore;

namespace {

constexpr double kPi = 3.14159265358979323846;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// Distance from z to {Re >= 0, |z| <= 1}.
double half_disk_distance(Complex z) {
  if (z.real() >= 0.0) return std::max(0.0, std::abs(z) - 1.0);
  if (std::abs(z.imag()) <= 1.0) return -z.real();
  return std::hypot(z.real(), std::abs(z.imag()) - 1.0);
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

int failures = 0;

void criterion(int idx, const std::string& label, bool ok,
               const std::string& detail) {
  std::printf("%s %2d  %s (%s)\n", ok ? "PASS" : "FAIL", idx, label.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void c1_binary_tree_roots() {
  auto start = std::chrono::steady_clock::now();
  double clearance = 1e300;
  bool ok = true;
  for (int k = 0; k <= 6; ++k) {
    Polynomial z = dary_tree_polynomial(2, k);
    for (const auto& r : polynomial_roots(z)) {
      double dist = half_disk_distance(r.value);
      clearance = std::min(clearance, dist);
      ok = ok && dist > 0.0;
    }
  }
  double elapsed = seconds_since(start);
  ok = ok && elapsed < 60.0;
  criterion(1, "binary tree roots clear the right unit half-disk", ok,
            "min clearance " + num(clearance) + ", " + num(elapsed) + "s");
}

void c2_endpoint_identities() {
  double worst = 0.0;
  for (int d = 2; d <= 64; ++d) {
    double tan_d = std::tan(kPi / (2.0 * d));
    worst = std::max(worst, std::fabs(s_radius(0.0, kPi / 2, d) - tan_d));
    worst = std::max(worst, std::fabs(s_radius(kPi / 2, kPi / 2, d) - tan_d));
    worst = std::max(worst, std::fabs(t_angle(0.0, d) - kPi / 2));
    worst = std::max(worst, std::fabs(t_angle(kPi / 2, d)));
  }
  criterion(2, "boundary endpoint identities", worst <= 1e-10,
            "worst deviation " + num(worst));
}

void c3_flat_boundary() {
  double worst = 0.0;
  for (int i = 0; i < 1024; ++i) {
    double beta = kPi / 2 * i / 1023.0;
    worst = std::max(worst, std::fabs(s_radius(beta, kPi / 2, 2) - 1.0));
  }
  criterion(3, "flat boundary at branching factor 2", worst <= 1e-10,
            "max |s - 1| = " + num(worst));
}

void c4_lower_bound_chain() {
  auto start = std::chrono::steady_clock::now();
  double min_ratio = 1e300, min_margin = 1e300;
  for (int d = 3; d <= 64; ++d) {
    double tan_d = std::tan(kPi / (2.0 * d));
    for (int i = 0; i < 257; ++i) {
      double beta = kPi / 2 * i / 256.0;
      double s = s_radius(beta, kPi / 2, d);
      min_ratio = std::min(min_ratio, s / tan_d);
      double lower = (2.0 * beta + kPi) / (kPi * (1.0 + std::sin(beta))) * tan_d;
      min_margin = std::min(min_margin, s - lower);
    }
  }
  double elapsed = seconds_since(start);
  bool ok = min_ratio >= 0.875 && min_margin >= -1e-12 && elapsed < 5.0;
  criterion(4, "boundary modulus lower-bound chain", ok,
            "min s/tan " + num(min_ratio) + ", min slack " + num(min_margin) +
                ", " + num(elapsed) + "s");
}

void c5_containment() {
  long bad = 0, checks = 0;
  for (int delta : {3, 4, 10}) {
    ContainmentReport rep = region_containment_scan(delta - 1, 256);
    bad += static_cast<long>(rep.counterexamples.size());
    checks += rep.checks;
  }
  criterion(5, "region containment scans", bad == 0,
            std::to_string(checks) + " checks, " + std::to_string(bad) +
                " counterexamples");
}

void c6_divisibility(const std::vector<Graph>& corpus) {
  auto start = std::chrono::steady_clock::now();
  long ok_count = 0, total = 0;
  for (const Graph& g : corpus) {
    Polynomial zg = independence_polynomial(g);
    int busiest = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
      if (g.degree(v) > g.degree(busiest)) busiest = v;
    std::vector<int> starts = {0};
    if (busiest != 0) starts.push_back(busiest);
    for (int root : starts) {
      Polynomial zt = tree_independence_polynomial(saw_tree(g, root));
      ++total;
      if (zt.try_divide(zg).has_value()) ++ok_count;
    }
  }
  double elapsed = seconds_since(start);
  bool ok = ok_count == total && elapsed < 120.0;
  criterion(6, "host polynomial divides walk-tree polynomial", ok,
            std::to_string(ok_count) + "/" + std::to_string(total) +
                " divisions exact, " + num(elapsed) + "s");
}

void c7_oracle_equivalence(const std::vector<Graph>& corpus) {
  long mismatches = 0, total = 0;
  auto check = [&](const Graph& g) {
    ++total;
    if (independence_polynomial(g) != brute_force_polynomial(g)) ++mismatches;
  };
  for (const Graph& g : corpus) check(g);
  for (const Graph& g : named_small_graphs(12)) check(g);
  criterion(7, "engine matches exhaustive enumeration", mismatches == 0,
            std::to_string(total) + " graphs, " + std::to_string(mismatches) +
                " mismatches");
}

void c8_inequality_sweep() {
  SectionReport rep = verify_inequalities(2, 64, 257, Exec::parallel);
  double worst_zero = 0.0;
  for (int d = 2; d <= 64; ++d) {
    worst_zero = std::max(worst_zero, std::fabs(f_function(d, 0.0)));
    worst_zero = std::max(worst_zero, std::fabs(g_function(d, 0.0)));
    if (d >= 3) {
      worst_zero = std::max(worst_zero, std::fabs(f_function(d, kPi / 2)));
      worst_zero = std::max(worst_zero, std::fabs(g_function(d, kPi / 2)));
    }
  }
  bool ok = rep.total_violations == 0 && worst_zero <= 1e-10;
  criterion(8, "scalar inequality sweep", ok,
            std::to_string(rep.checks.size()) + " checks, " +
                std::to_string(rep.total_violations) + " violations, endpoint " +
                num(worst_zero));
}

void c9_zero_dense_anchors() {
  double worst_anchor = 0.0;
  for (int d = 2; d <= 64; ++d)
    worst_anchor = std::max(
        worst_anchor,
        std::abs(ud_boundary_point(0.0, d) - Complex{-shearer_radius(d + 1), 0.0}));
  worst_anchor = std::max(
      worst_anchor, std::abs(ud_boundary_point(kPi, 2) - Complex{4.0, 0.0}));

  bool roots_outside = true;
  double clearance = 1e300;
  for (int d : {2, 3}) {
    for (int k = 0; k <= 4; ++k) {
      Polynomial z = dary_tree_polynomial(d, k);
      if (z.degree() < 1) continue;
      for (const auto& r : polynomial_roots(z)) {
        UdMembership m = ud_membership(r.value, d);
        roots_outside = roots_outside && !m.inside;
        clearance = std::min(clearance, m.boundary_distance);
      }
    }
  }
  bool ok = worst_anchor <= 1e-12 && roots_outside && clearance > 0.0;
  criterion(9, "zero-dense domain anchors and tree roots", ok,
            "anchor deviation " + num(worst_anchor) + ", root clearance " +
                num(clearance));
}

void c10_interior_zero_freeness(const std::vector<Graph>& corpus) {
  double min_abs = 1e300;
  long evals = 0;
  bool pole_free = true;
  std::vector<Graph> pool = corpus;
  for (const Graph& g : named_small_graphs(12)) pool.push_back(g);

  for (int delta : {3, 10}) {
    int d = delta - 1;
    std::vector<Complex> points;
    for (int j = 0; j < 50; ++j) {
      double beta = kPi / 2 * j / 49.0;
      double r = 0.95 * s_radius(beta, kPi / 2, d);
      double t = t_angle(beta, d) * (j % 2 == 0 ? 1.0 : -1.0);
      points.push_back(r * Complex{std::cos(t), std::sin(t)});
    }
    for (const Graph& g : pool) {
      if (g.max_degree() > delta) continue;
      for (Complex lam : points) {
        min_abs = std::min(min_abs, std::abs(evaluate_independence(g, lam)));
        ++evals;
      }
    }
    for (int k = 0; k <= 3; ++k) {
      RootedTree t = complete_dary_tree(d, k);
      for (Complex lam : points) {
        try {
          min_abs = std::min(min_abs, std::abs(tree_evaluate(t, lam).partition));
        } catch (const SingularityError&) {
          pole_free = false;
        }
        ++evals;
      }
    }
  }
  bool ok = pole_free && min_abs > 1e-8;
  criterion(10, "interior activities keep the partition function nonzero", ok,
            std::to_string(evals) + " evaluations, min |Z| = " + num(min_abs));
}

}  // namespace

int main() {
  std::vector<Graph> corpus = verification_corpus(1, 200);

  c1_binary_tree_roots();
  c2_endpoint_identities();
  c3_flat_boundary();
  c4_lower_bound_chain();
  c5_containment();
  c6_divisibility(corpus);
  c7_oracle_equivalence(corpus);
  c8_inequality_sweep();
  c9_zero_dense_anchors();
  c10_interior_zero_freeness(corpus);

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
