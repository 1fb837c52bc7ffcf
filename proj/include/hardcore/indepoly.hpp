#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hardcore/graph.hpp"
#include "hardcore/polynomial.hpp"

namespace hardcore {

// Computes independence polynomials by the vertex-deletion recursion
//   Z_G = Z_{G - v} + x * Z_{G - N[v]}
// pivoting on a maximum-degree vertex, splitting across connected
// components, and memoizing on a canonical adjacency signature.  An engine
// instance keeps its memo table across calls; reuse it when evaluating many
// related graphs.
class IndependenceEngine {
 public:
  explicit IndependenceEngine(int vertex_cap = 64) : vertex_cap_(vertex_cap) {}

  Polynomial polynomial(const Graph& g);
  Complex evaluate(const Graph& g, Complex activity);
  // Multivariate evaluation with one activity per vertex.
  Complex evaluate(const Graph& g, const std::vector<Complex>& activities);

  std::size_t memo_size() const { return poly_memo_.size(); }

 private:
  using ValueMemo = std::unordered_map<std::string, Complex>;

  Polynomial poly_connected(const Graph& g);
  Polynomial poly_rec(const Graph& g);
  Complex value_rec(const Graph& g, const std::vector<Complex>& activities,
                    ValueMemo& memo);
  Complex value_connected(const Graph& g, const std::vector<Complex>& activities,
                          ValueMemo& memo);

  int vertex_cap_;
  std::unordered_map<std::string, Polynomial> poly_memo_;
};

Polynomial independence_polynomial(const Graph& g, int vertex_cap = 64);

// Exhaustive reference: enumerates independent sets directly.  Rejects
// graphs with more than 24 vertices.
Polynomial brute_force_polynomial(const Graph& g);

Complex evaluate_independence(const Graph& g, Complex activity,
                              int vertex_cap = 64);
Complex evaluate_multivariate(const Graph& g,
                              const std::vector<Complex>& activities,
                              int vertex_cap = 64);

// Z of the complete d-ary tree of depth k via the two-level recurrence
//   A_k = A_{k-1}^d + x * A_{k-2}^(d^2),
// an independent cross-check for tree polynomials.
Polynomial dary_tree_polynomial(int d, int k, int degree_cap = 1 << 16);

// Z of an arbitrary rooted tree by the occupied/free bottom-up recursion;
// handles trees far beyond the generic engine's vertex cap.
Polynomial tree_independence_polynomial(const RootedTree& t);

}  // namespace hardcore
