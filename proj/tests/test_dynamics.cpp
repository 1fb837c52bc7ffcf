#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "hardcore/dynamics.hpp"
#include "hardcore/errors.hpp"
#include "hardcore/graph.hpp"
#include "hardcore/indepoly.hpp"

using namespace hardcore;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Quotient definition of the ratio, straight from exact polynomials.
Complex ratio_by_quotient(const RootedTree& t, Complex lam) {
  const Graph& g = t.graph;
  Polynomial num =
      independence_polynomial(delete_vertices(g, closed_neighborhood(g, t.root)).graph);
  Polynomial den = independence_polynomial(delete_vertices(g, {t.root}).graph);
  return lam * num.evaluate(lam) / den.evaluate(lam);
}

}  // namespace

TEST_CASE("tree ratio base cases") {
  RootedTree single = RootedTree::make(empty_graph(1), 0);
  Complex lam{0.3, 0.4};
  CHECK(tree_ratio(single, lam) == lam);

  RootedTree p2 = RootedTree::make(path_graph(2), 0);
  CHECK(std::abs(tree_ratio(p2, {1, 0}) - Complex{0.5, 0}) <= 1e-15);

  RootedTree star = RootedTree::make(star_graph(3), 0);
  CHECK(std::abs(tree_ratio(star, {1, 0}) - Complex{0.125, 0}) <= 1e-15);
}

TEST_CASE("tree ratio matches the polynomial quotient") {
  std::vector<RootedTree> trees = {
      RootedTree::make(path_graph(7), 2), RootedTree::make(star_graph(5), 0),
      RootedTree::make(star_graph(5), 1), complete_dary_tree(2, 3),
      complete_dary_tree(3, 2)};
  for (const RootedTree& t : trees) {
    for (int i = 0; i < 12; ++i) {
      double arg = 2.0 * kPi * i / 12.0;
      Complex lam = 0.35 * Complex{std::cos(arg), std::sin(arg)};
      Complex rec = tree_ratio(t, lam);
      Complex quo = ratio_by_quotient(t, lam);
      CHECK(std::abs(rec - quo) <= 1e-10 * (1.0 + std::abs(quo)));
    }
  }
}

TEST_CASE("partition telescopes over the ratio recursion") {
  std::vector<RootedTree> trees = {RootedTree::make(path_graph(6), 0),
                                   complete_dary_tree(2, 3),
                                   complete_dary_tree(4, 2)};
  for (const RootedTree& t : trees) {
    for (int i = 0; i < 8; ++i) {
      double arg = 2.0 * kPi * i / 8.0;
      Complex lam = 0.3 * Complex{std::cos(arg), std::sin(arg)};
      TreeEvaluation ev = tree_evaluate(t, lam);
      Complex direct = evaluate_independence(t.graph, lam, 1 << 10);
      CHECK(std::abs(ev.partition - direct) <= 1e-10 * (1.0 + std::abs(direct)));
      // Z != 0 exactly when the root ratio stays away from -1.
      if (std::abs(ev.root_ratio + Complex{1, 0}) > 1e-6)
        CHECK(std::abs(ev.partition) > 0.0);
    }
  }
}

TEST_CASE("ratio map") {
  Complex lam{0.7, -0.1};
  CHECK(ratio_map(lam, {}) == lam);
  CHECK(std::abs(ratio_map({1, 0}, {{1, 0}, {1, 0}}) - Complex{0.25, 0}) <= 1e-15);

  std::vector<Complex> zs = {{0.2, 0.1}, {-0.3, 0.4}};
  std::vector<Complex> padded = zs;
  for (int i = 0; i < 3; ++i) padded.push_back({0.0, 0.0});
  CHECK(ratio_map(lam, zs) == ratio_map(lam, padded));

  CHECK_THROWS_AS(ratio_map(lam, {{-1.0, 0.0}}), SingularityError);
}

TEST_CASE("sector membership") {
  ConeDomain any{1.0, kPi / 2, kPi / 2};
  CHECK(any.contains({0, 0}));
  CHECK(any.contains({0, 1}));       // boundary
  CHECK(!any.contains({-0.5, 0}));   // arg = pi
  CHECK(!any.contains({0, 1.001}));  // modulus

  ConeDomain zero{0.0, 0.0, 0.0};
  CHECK(zero.contains({0, 0}));

  CHECK(any.distance_to_minus_one() > 0.0);
  ConeDomain thin{0.5, 0.3, 0.3};
  CHECK(thin.distance_to_minus_one() >= 0.5 - 1e-15);

  ConeDomain bad{-1.0, 0.0, 0.0};
  CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("sector invariance witnesses the certificate") {
  // d * arctan|x| <= pi/2 makes the full quarter sector invariant.
  for (int d = 2; d <= 5; ++d) {
    double r = 0.9 * std::tan(kPi / (2.0 * d));
    ConeDomain cone{r, kPi / 2, kPi / 2};
    ConeCheckResult res = cone_invariance_check({r, 0}, cone, d, 400, 5);
    CHECK(res.invariant);
  }

  // Far outside any certificate: x = 2, d = 2, asymmetric sector.
  ConeCheckResult bad =
      cone_invariance_check({2, 0}, ConeDomain{2.0, 0.0, kPi / 2}, 2, 400, 5);
  CHECK(!bad.invariant);
  CHECK(bad.counterexample.size() == 2);
  CHECK(!ConeDomain{2.0, 0.0, kPi / 2}.contains(bad.image));

  // Zero coordinates: the map is constantly x.
  ConeCheckResult empty =
      cone_invariance_check({0.5, 0}, ConeDomain{0.5, 0.1, 0.1}, 0, 10, 5);
  CHECK(empty.invariant);

  CHECK_THROWS_AS(
      cone_invariance_check({2, 0}, ConeDomain{1.0, 0.1, 0.1}, 2, 10, 5),
      InputError);
}

TEST_CASE("orbit exploration") {
  OrbitReport base = orbit_explore({0.25, 0.1}, 3, 0, 100, 7);
  CHECK(base.min_distance == 1.0);
  CHECK(base.witness == Complex{0, 0});

  OrbitReport one = orbit_explore({-0.5, 0.0}, 3, 1, 100, 7);
  CHECK(one.min_distance <= 0.5 + 1e-15);

  // Deeper exploration with the same seed only extends the sample.
  double prev = 2.0;
  for (int depth : {2, 4, 6, 8}) {
    OrbitReport r = orbit_explore({-0.12, 0.03}, 2, depth, 500, 11);
    CHECK(r.min_distance <= prev + 1e-15);
    prev = r.min_distance;
  }

  // Just outside the zero-dense boundary on the negative axis the orbit
  // closes in on -1.
  OrbitReport close = orbit_explore({-4.0 / 27.0 - 0.05, 0.0}, 2, 12, 2000, 1);
  CHECK(close.min_distance < 0.05);

  CHECK_THROWS_AS(orbit_explore({0.1, 0}, 0, 3, 100, 1), InputError);
  CHECK_THROWS_AS(orbit_explore({0.1, 0}, 2, -1, 100, 1), InputError);
  CHECK_THROWS_AS(orbit_explore({0.1, 0}, 2, 3, 0, 1), InputError);
}

TEST_CASE("ball radius around -1") {
  CHECK(minus_one_ball_radius({-27.0 / 256.0, 0.0}, 3) ==
        doctest::Approx(27.0 / 1024.0).epsilon(1e-14));
  CHECK(minus_one_ball_radius({1.0, 0.0}, 4) ==
        doctest::Approx(16.0 / 27.0).epsilon(1e-14));
  CHECK_THROWS_AS(minus_one_ball_radius({1.0, 0.0}, 2), InputError);
  CHECK_THROWS_AS(minus_one_ball_radius({0.05, 0.0}, 3), InputError);
}
