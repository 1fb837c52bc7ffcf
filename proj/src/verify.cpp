#include "hardcore/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "hardcore/analysis.hpp"
#include "hardcore/dynamics.hpp"
#include "hardcore/errors.hpp"
#include "hardcore/indepoly.hpp"
#include "hardcore/regions.hpp"
#include "hardcore/roots.hpp"

namespace hardcore {

namespace {

constexpr std::size_t kFailureCap = 12;

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string cnum(Complex z) { return num(z.real()) + "," + num(z.imag()); }

// Distance from z to the set {Re >= 0, |z| <= 1}; zero on the set itself.
double half_disk_distance(Complex z) {
  if (z.real() >= 0.0) return std::max(0.0, std::abs(z) - 1.0);
  double iy = std::fabs(z.imag());
  if (iy <= 1.0) return -z.real();
  return std::hypot(z.real(), iy - 1.0);
}

// Fifty interior activities along the shrunk boundary, alternating the sign
// of the argument so both half-planes are exercised.
std::vector<Complex> interior_activities(int d, double shrink, int count) {
  std::vector<Complex> out;
  out.reserve(count);
  for (int j = 0; j < count; ++j) {
    double beta = (M_PI / 2) * j / (count - 1);
    double r = shrink * s_radius(beta, M_PI / 2, d);
    double a = t_angle(beta, d);
    out.push_back(std::polar(r, j % 2 ? a : -a));
  }
  return out;
}

}  // namespace

void SuiteResult::record(bool ok, const std::string& detail) {
  ++checks;
  if (!ok) {
    ++violations;
    if (failures.size() < kFailureCap) failures.push_back(detail);
  }
}

std::vector<Graph> verification_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vertices(3, 10);
  std::uniform_int_distribution<int> extra(0, 4);
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(random_connected_graph(vertices(rng), extra(rng), 5, rng));
  return out;
}

std::vector<Graph> named_small_graphs(int max_vertices) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_vertices; ++n) out.push_back(complete_graph(n));
  for (int n = 3; n <= max_vertices; ++n) out.push_back(cycle_graph(n));
  for (int n = 1; n <= max_vertices; ++n) out.push_back(path_graph(n));
  for (int leaves = 2; leaves + 1 <= max_vertices; ++leaves)
    out.push_back(star_graph(leaves));
  return out;
}

SuiteResult run_inequality_suite(const VerifyOptions& opts) {
  SuiteResult res{"inequalities"};
  int d_lo = std::max(2, opts.delta_min - 1);
  int d_hi = opts.delta_max - 1;
  if (d_hi < d_lo) return res;
  SectionReport report = verify_inequalities(d_lo, d_hi, 257, opts.exec);
  for (const InequalityCheck& chk : report.checks)
    res.record(chk.violations == 0,
               chk.name + " d=" + std::to_string(chk.d) + " violations=" +
                   std::to_string(chk.violations) + " worst=" +
                   num(chk.worst_margin));
  return res;
}

SuiteResult run_region_suite(const VerifyOptions& opts) {
  SuiteResult res{"regions"};
  for (int delta = std::max(3, opts.delta_min); delta <= opts.delta_max;
       ++delta) {
    int d = delta - 1;
    std::string tag = " d=" + std::to_string(d);

    ContainmentReport scan = region_containment_scan(d, 256, opts.exec);
    res.record(scan.counterexamples.empty(),
               "containment" + tag + " bad=" +
                   std::to_string(scan.counterexamples.size()) +
                   (scan.counterexamples.empty()
                        ? ""
                        : " first=" + scan.counterexamples[0].relation + "@" +
                              cnum(scan.counterexamples[0].lam)));

    double edge = std::tan(M_PI / (2.0 * d));
    res.record(std::fabs(s_radius(0.0, M_PI / 2, d) - edge) <= 1e-10,
               "s(0)" + tag);
    res.record(std::fabs(s_radius(M_PI / 2, M_PI / 2, d) - edge) <= 1e-10,
               "s(pi/2)" + tag);
    res.record(std::fabs(t_angle(0.0, d) - M_PI / 2) <= 1e-10, "t(0)" + tag);
    res.record(std::fabs(t_angle(M_PI / 2, d)) <= 1e-10, "t(pi/2)" + tag);

    if (d == 2) {
      double worst = 0.0;
      for (int i = 0; i < 1024; ++i) {
        double beta = (M_PI / 2) * i / 1023;
        worst = std::max(worst, std::fabs(s_radius(beta, M_PI / 2, 2) - 1.0));
      }
      res.record(worst <= 1e-10, "flatness worst=" + num(worst));
    } else {
      double worst_ratio = 1e300, worst_slack = 1e300;
      for (int i = 0; i < 257; ++i) {
        double beta = (M_PI / 2) * i / 256;
        double s = s_radius(beta, M_PI / 2, d);
        worst_ratio = std::min(worst_ratio, s / edge);
        worst_slack = std::min(
            worst_slack, s - v_value(d, beta) / (1.0 + std::sin(beta)));
      }
      res.record(worst_ratio >= 7.0 / 8.0,
                 "s/tan ratio" + tag + " min=" + num(worst_ratio));
      res.record(worst_slack >= -1e-12,
                 "s lower bound" + tag + " worst=" + num(worst_slack));
    }

    Complex anchor = ud_boundary_point(0.0, d);
    res.record(std::abs(anchor - Complex{-shearer_radius(d + 1), 0.0}) <= 1e-12,
               "ud anchor theta=0" + tag + " got=" + cnum(anchor));
    if (d == 2) {
      Complex far = ud_boundary_point(M_PI, 2);
      res.record(std::abs(far - Complex{4.0, 0.0}) <= 1e-12,
                 "ud anchor theta=pi d=2 got=" + cnum(far));
    }
    res.record(ud_curve_is_simple(d, 512), "ud curve simple" + tag);
  }
  return res;
}

SuiteResult run_divisibility_suite(const VerifyOptions& opts) {
  SuiteResult res{"divisibility"};
  IndependenceEngine engine;
  std::vector<Graph> corpus = verification_corpus(opts.seed, opts.corpus_size);
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    Polynomial zg = engine.polynomial(g);
    int busiest = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
      if (g.degree(v) > g.degree(busiest)) busiest = v;
    for (int root : {0, busiest}) {
      if (root == busiest && busiest == 0) continue;
      RootedTree walk_tree = saw_tree(g, root);
      Polynomial zt = tree_independence_polynomial(walk_tree);
      res.record(zt.try_divide(zg).has_value(),
                 "graph " + std::to_string(gi) + " root " +
                     std::to_string(root) + " remainder nonzero");
    }
  }
  return res;
}

SuiteResult run_zerofree_suite(const VerifyOptions& opts) {
  SuiteResult res{"zerofree"};

  // Binary-tree zeros must clear the right unit half-disk.
  double clearance = 1e300;
  for (int k = 0; k <= 6; ++k) {
    Polynomial p = dary_tree_polynomial(2, k);
    for (const RootEstimate& root : polynomial_roots(p)) {
      double dist = half_disk_distance(root.value);
      clearance = std::min(clearance, dist);
      res.record(dist > 0.0, "half-disk hit k=" + std::to_string(k) +
                                 " root=" + cnum(root.value));
    }
  }
  res.record(clearance > 0.0, "half-disk clearance=" + num(clearance));

  // Interior activities keep |Z| away from zero on the corpus and on trees.
  std::vector<Graph> pool = verification_corpus(opts.seed, opts.corpus_size);
  std::vector<Graph> named = named_small_graphs(12);
  pool.insert(pool.end(), named.begin(), named.end());
  std::vector<int> deltas{opts.delta_min};
  if (opts.delta_max != opts.delta_min) deltas.push_back(opts.delta_max);
  for (int delta : deltas) {
    if (delta < 3) continue;
    int d = delta - 1;
    std::string tag = " delta=" + std::to_string(delta);
    std::vector<Complex> lams = interior_activities(d, 0.95, 50);
    for (Complex lam : lams)
      res.record(new_domain_contains(lam, d),
                 "sample escaped domain" + tag + " lam=" + cnum(lam));
    std::vector<RootedTree> trees;
    for (int k = 0; k <= 3; ++k) trees.push_back(complete_dary_tree(d, k));
    for (Complex lam : lams) {
      for (const Graph& g : pool) {
        if (g.max_degree() > delta) continue;
        double mag = std::abs(evaluate_independence(g, lam));
        res.record(mag > 1e-8, "near-zero" + tag + " lam=" + cnum(lam) +
                                   " n=" + std::to_string(g.vertex_count()) +
                                   " |Z|=" + num(mag));
      }
      for (std::size_t k = 0; k < trees.size(); ++k) {
        bool ok = false;
        std::string why;
        try {
          double mag = std::abs(tree_evaluate(trees[k], lam).partition);
          ok = mag > 1e-8;
          why = " |Z|=" + num(mag);
        } catch (const SingularityError&) {
          why = " ratio pole";
        }
        res.record(ok, "tree near-zero" + tag + " k=" + std::to_string(k) +
                           " lam=" + cnum(lam) + why);
      }
    }
  }
  return res;
}

std::vector<SuiteResult> run_suites(const std::string& which,
                                    const VerifyOptions& opts) {
  std::vector<SuiteResult> out;
  bool all = which == "all";
  if (all || which == "inequalities") out.push_back(run_inequality_suite(opts));
  if (all || which == "regions") out.push_back(run_region_suite(opts));
  if (all || which == "divisibility")
    out.push_back(run_divisibility_suite(opts));
  if (all || which == "zerofree") out.push_back(run_zerofree_suite(opts));
  if (out.empty()) throw InputError("unknown suite: " + which);
  return out;
}

}  // namespace hardcore
