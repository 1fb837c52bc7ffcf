#include "hardcore/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hardcore/errors.hpp"

namespace hardcore {

namespace {

constexpr double kDenominatorFloor = 1e-14;

double arg_or_zero(Complex z) {
  if (z == Complex{0.0, 0.0}) return 0.0;
  return std::arg(z);
}

double point_segment_distance(Complex p, Complex a, Complex b) {
  Complex ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

TreeEvaluation tree_evaluate(const RootedTree& t, Complex activity) {
  int n = t.graph.vertex_count();
  std::vector<int> parent = t.parents();
  // BFS order so every child precedes its parent when walked backwards.
  std::vector<int> order;
  order.reserve(n);
  order.push_back(t.root);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int v : t.graph.neighbors(order[i]))
      if (v != parent[order[i]]) order.push_back(v);
  std::vector<Complex> ratio(n);
  Complex partition{1.0, 0.0};
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    Complex r = activity;
    for (int c : t.graph.neighbors(v)) {
      if (c == parent[v]) continue;
      Complex denom = Complex{1.0, 0.0} + ratio[c];
      if (std::abs(denom) < kDenominatorFloor)
        throw SingularityError(
            "ratio denominator vanished at subtree root " + std::to_string(c),
            c);
      r /= denom;
    }
    ratio[v] = r;
    partition *= Complex{1.0, 0.0} + r;
  }
  return {ratio[t.root], partition};
}

Complex tree_ratio(const RootedTree& t, Complex activity) {
  return tree_evaluate(t, activity).root_ratio;
}

Complex ratio_map(Complex activity, const std::vector<Complex>& zs) {
  Complex denom{1.0, 0.0};
  for (std::size_t i = 0; i < zs.size(); ++i) {
    Complex factor = Complex{1.0, 0.0} + zs[i];
    if (std::abs(factor) < kDenominatorFloor)
      throw SingularityError("map argument " + std::to_string(i) +
                                 " sits at the pole",
                             static_cast<int>(i));
    denom *= factor;
  }
  return activity / denom;
}

void ConeDomain::validate() const {
  if (radius < 0.0) throw InputError("sector radius must be non-negative");
  if (beta < 0.0 || beta > M_PI / 2 || gamma < 0.0 || gamma > M_PI / 2)
    throw InputError("sector half-angles must lie in [0, pi/2]");
}

bool ConeDomain::contains(Complex z) const {
  validate();
  if (std::abs(z) > radius) return false;
  double a = arg_or_zero(z);
  return -beta <= a && a <= gamma;
}

double ConeDomain::distance_to_minus_one() const {
  validate();
  const Complex target{-1.0, 0.0};
  Complex hi = std::polar(radius, gamma);
  Complex lo = std::polar(radius, -beta);
  double best = point_segment_distance(target, {0.0, 0.0}, hi);
  best = std::min(best, point_segment_distance(target, {0.0, 0.0}, lo));
  // Arc part: nearest angle to pi clamps to an endpoint since gamma <= pi/2.
  best = std::min(best, std::abs(target - hi));
  best = std::min(best, std::abs(target - lo));
  return best;
}

ConeCheckResult cone_invariance_check(Complex activity, const ConeDomain& cone,
                                      int d, int trials, std::uint64_t seed) {
  cone.validate();
  if (d < 0) throw InputError("coordinate count must be non-negative");
  if (std::abs(activity) > cone.radius)
    throw InputError("activity modulus exceeds the sector radius");
  std::vector<std::vector<Complex>> tuples;
  if (d == 0) {
    // Empty product: the image is the activity itself.
    tuples.push_back({});
  } else {
    Complex hi = std::polar(cone.radius, cone.gamma);
    Complex lo = std::polar(cone.radius, -cone.beta);
    std::vector<Complex> corners{{0.0, 0.0}, hi, lo, Complex{cone.radius, 0.0}};
    for (Complex c : corners) tuples.push_back(std::vector<Complex>(d, c));
    tuples.push_back([&] {
      std::vector<Complex> t(d, {0.0, 0.0});
      t[0] = hi;
      return t;
    }());
    tuples.push_back([&] {
      std::vector<Complex> t(d, {0.0, 0.0});
      t[0] = lo;
      return t;
    }());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto sample = [&] {
      // Uniform over the sector by area.
      double r = cone.radius * std::sqrt(unit(rng));
      double a = -cone.beta + (cone.beta + cone.gamma) * unit(rng);
      return std::polar(r, a);
    };
    for (int t = 0; t < trials; ++t) {
      std::vector<Complex> tuple(d);
      for (int i = 0; i < d; ++i) tuple[i] = sample();
      tuples.push_back(std::move(tuple));
    }
  }
  for (auto& tuple : tuples) {
    Complex image = ratio_map(activity, tuple);
    if (!cone.contains(image)) return {false, tuple, image};
  }
  return {true, {}, {}};
}

OrbitReport orbit_explore(Complex activity, int d, int depth, int budget,
                          std::uint64_t seed) {
  if (d < 1) throw InputError("need at least one coordinate");
  if (depth < 0) throw InputError("depth must be non-negative");
  if (budget < 1) throw InputError("budget must be positive");
  std::vector<Complex> pool{{0.0, 0.0}};
  OrbitReport report;
  report.depth = depth;
  report.samples = 1;
  report.min_distance = 1.0;  // |0 - (-1)|
  report.witness = {0.0, 0.0};
  auto admit = [&](Complex z) {
    ++report.samples;
    double dist = std::abs(z - Complex{-1.0, 0.0});
    if (dist < report.min_distance) {
      report.min_distance = dist;
      report.witness = z;
    }
    pool.push_back(z);
  };
  // A tuple sitting on the pole pins the set against -1 exactly.
  auto step = [&](const std::vector<Complex>& tuple) {
    try {
      admit(ratio_map(activity, tuple));
      return true;
    } catch (const SingularityError& err) {
      report.min_distance = 0.0;
      report.witness = tuple[err.vertex];
      return false;
    }
  };
  for (int level = 1; level <= depth; ++level) {
    // A level-local generator keeps deeper runs prefix-compatible with
    // shallower ones under the same seed.
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * level));
    std::size_t pool_end = pool.size();
    std::uniform_int_distribution<std::size_t> pick(0, pool_end - 1);
    std::vector<Complex> tuple(d);
    int produced = 0;
    // Extremal fills: iterate the last few pool entries as uniform tuples.
    for (std::size_t back = 0; back < 4 && back < pool_end && produced < budget;
         ++back) {
      std::fill(tuple.begin(), tuple.end(), pool[pool_end - 1 - back]);
      if (!step(tuple)) return report;
      ++produced;
    }
    while (produced < budget) {
      for (int i = 0; i < d; ++i) tuple[i] = pool[pick(rng)];
      if (!step(tuple)) return report;
      ++produced;
    }
  }
  return report;
}

double minus_one_ball_radius(Complex activity, int d) {
  if (d < 3) throw InputError("branching factor must be at least 3");
  double r = std::abs(activity);
  double threshold = std::pow(static_cast<double>(d) / (d + 1), d) / (d + 1);
  if (r < threshold * (1.0 - 1e-12))
    throw InputError("activity modulus below the critical threshold");
  return r * (d - 2) * std::pow(static_cast<double>(d - 2) / (d - 1), d - 1);
}

}  // namespace hardcore
