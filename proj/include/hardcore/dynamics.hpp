#pragma once

#include <cstdint>
#include <vector>

#include "hardcore/graph.hpp"
#include "hardcore/polynomial.hpp"

namespace hardcore {

// Occupation ratios on rooted trees.  With R_v = x * prod_c 1/(1 + R_c)
// over the children of v (leaves get R = x), the partition function
// telescopes to Z_T = prod_v (1 + R_v).
struct TreeEvaluation {
  Complex root_ratio;
  Complex partition;
};

TreeEvaluation tree_evaluate(const RootedTree& t, Complex activity);
Complex tree_ratio(const RootedTree& t, Complex activity);

// One step of the d-variable ratio map (z_1..z_d) -> x / prod (1 + z_i).
Complex ratio_map(Complex activity, const std::vector<Complex>& zs);

// Truncated sector {|z| <= radius, -beta <= arg z <= gamma}, the invariant
// shape for the ratio map.  arg 0 is taken as 0, so 0 belongs to every
// sector.
struct ConeDomain {
  double radius = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  bool contains(Complex z) const;
  double distance_to_minus_one() const;
  void validate() const;
};

struct ConeCheckResult {
  bool invariant;  // no counterexample found
  std::vector<Complex> counterexample;
  Complex image;
};

// Samples d-tuples from the sector (corner points plus uniform-by-area
// random fills) and tests that the map image stays inside.  Requires
// |activity| <= cone radius so the image of the all-zero tuple qualifies.
ConeCheckResult cone_invariance_check(Complex activity, const ConeDomain& cone,
                                      int d, int trials, std::uint64_t seed);

struct OrbitReport {
  int depth = 0;
  std::int64_t samples = 0;
  double min_distance = 0.0;  // distance from -1 to everything generated
  Complex witness;            // the element achieving it
};

// Grows a finite sample of the smallest set containing 0 and closed under
// the d-variable map, level by level.  Each level applies the map to tuples
// drawn from everything generated so far: a few extremal tuples first, then
// seeded random ones, at most `budget` per level.  Deeper runs with the same
// seed extend shallower ones, so min_distance is non-increasing in depth.
OrbitReport orbit_explore(Complex activity, int d, int depth, int budget,
                          std::uint64_t seed);

// Radius |x| (d-2)^d / (d-1)^(d-1) of a disk around -1 reached by ratios
// once |x| >= d^d/(d+1)^(d+1); needs d >= 3.
double minus_one_ball_radius(Complex activity, int d);

}  // namespace hardcore
