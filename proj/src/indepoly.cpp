#include "hardcore/indepoly.hpp"

#include <algorithm>
#include <cstring>

#include "hardcore/errors.hpp"

namespace hardcore {

namespace {

void append_u32(std::string& s, std::uint32_t x) {
  char buf[4];
  std::memcpy(buf, &x, 4);
  s.append(buf, 4);
}

std::string adjacency_signature(const Graph& g) {
  std::string s;
  s.reserve(4 * (g.vertex_count() + 2 * g.edge_count() + 1));
  append_u32(s, static_cast<std::uint32_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    append_u32(s, 0xffffffffu);
    for (int w : g.neighbors(v)) append_u32(s, static_cast<std::uint32_t>(w));
  }
  return s;
}

std::string value_signature(const Graph& g, const std::vector<Complex>& acts) {
  std::string s = adjacency_signature(g);
  s.append(reinterpret_cast<const char*>(acts.data()),
           acts.size() * sizeof(Complex));
  return s;
}

int max_degree_vertex(const Graph& g) {
  int best = 0;
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  return best;
}

}  // namespace

Polynomial IndependenceEngine::poly_rec(const Graph& g) {
  if (g.vertex_count() == 0) return Polynomial::one();
  auto comps = connected_components(g);
  if (comps.size() == 1) return poly_connected(g);
  Polynomial product = Polynomial::one();
  for (const auto& comp : comps)
    product = product * poly_connected(induced_subgraph(g, comp).graph);
  return product;
}

Polynomial IndependenceEngine::poly_connected(const Graph& g) {
  if (g.vertex_count() == 1)
    return Polynomial({BigInt(1), BigInt(1)});
  std::string key = adjacency_signature(g);
  if (auto it = poly_memo_.find(key); it != poly_memo_.end()) return it->second;
  int v = max_degree_vertex(g);
  Polynomial without = poly_rec(delete_vertices(g, {v}).graph);
  Polynomial closed = poly_rec(delete_vertices(g, closed_neighborhood(g, v)).graph);
  Polynomial result = without + closed.shifted(1);
  poly_memo_.emplace(std::move(key), result);
  return result;
}

Polynomial IndependenceEngine::polynomial(const Graph& g) {
  if (g.vertex_count() > vertex_cap_)
    throw ResourceError("graph exceeds vertex cap " + std::to_string(vertex_cap_));
  return poly_rec(g);
}

Complex IndependenceEngine::value_rec(const Graph& g,
                                      const std::vector<Complex>& acts,
                                      ValueMemo& memo) {
  if (g.vertex_count() == 0) return {1.0, 0.0};
  auto comps = connected_components(g);
  if (comps.size() == 1) return value_connected(g, acts, memo);
  Complex product{1.0, 0.0};
  for (const auto& comp : comps) {
    auto sub = induced_subgraph(g, comp);
    std::vector<Complex> sub_acts(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      sub_acts[i] = acts[sub.original_index[i]];
    product *= value_connected(sub.graph, sub_acts, memo);
  }
  return product;
}

Complex IndependenceEngine::value_connected(const Graph& g,
                                            const std::vector<Complex>& acts,
                                            ValueMemo& memo) {
  if (g.vertex_count() == 1) return Complex{1.0, 0.0} + acts[0];
  std::string key = value_signature(g, acts);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int v = max_degree_vertex(g);
  auto restrict_acts = [&](const InducedSubgraph& sub) {
    std::vector<Complex> out(sub.original_index.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = acts[sub.original_index[i]];
    return out;
  };
  auto without = delete_vertices(g, {v});
  auto closed = delete_vertices(g, closed_neighborhood(g, v));
  Complex result = value_rec(without.graph, restrict_acts(without), memo) +
                   acts[v] * value_rec(closed.graph, restrict_acts(closed), memo);
  memo.emplace(std::move(key), result);
  return result;
}

Complex IndependenceEngine::evaluate(const Graph& g,
                                     const std::vector<Complex>& acts) {
  if (static_cast<int>(acts.size()) != g.vertex_count())
    throw InputError("need one activity per vertex");
  if (g.vertex_count() > vertex_cap_)
    throw ResourceError("graph exceeds vertex cap " + std::to_string(vertex_cap_));
  if (g.vertex_count() <= 24) {
    // Direct sum over independent sets, accumulated in DFS order.
    Complex total{1.0, 0.0};  // empty set
    std::vector<int> blocked(g.vertex_count(), 0);
    auto rec = [&](auto&& self, int v, Complex weight) -> void {
      for (int u = v; u < g.vertex_count(); ++u) {
        if (blocked[u]) continue;
        Complex w = weight * acts[u];
        total += w;
        for (int x : g.neighbors(u)) ++blocked[x];
        ++blocked[u];
        self(self, u + 1, w);
        --blocked[u];
        for (int x : g.neighbors(u)) --blocked[x];
      }
    };
    rec(rec, 0, Complex{1.0, 0.0});
    return total;
  }
  ValueMemo memo;
  return value_rec(g, acts, memo);
}

Complex IndependenceEngine::evaluate(const Graph& g, Complex activity) {
  return evaluate(g, std::vector<Complex>(g.vertex_count(), activity));
}

Polynomial independence_polynomial(const Graph& g, int vertex_cap) {
  IndependenceEngine engine(vertex_cap);
  return engine.polynomial(g);
}

Complex evaluate_independence(const Graph& g, Complex activity, int vertex_cap) {
  IndependenceEngine engine(vertex_cap);
  return engine.evaluate(g, activity);
}

Complex evaluate_multivariate(const Graph& g,
                              const std::vector<Complex>& activities,
                              int vertex_cap) {
  IndependenceEngine engine(vertex_cap);
  return engine.evaluate(g, activities);
}

Polynomial brute_force_polynomial(const Graph& g) {
  if (g.vertex_count() > 24)
    throw ResourceError("exhaustive enumeration limited to 24 vertices");
  std::vector<BigInt> counts(g.vertex_count() + 1);
  counts[0] = 1;  // empty set
  std::vector<int> blocked(g.vertex_count(), 0);
  auto rec = [&](auto&& self, int v, int size) -> void {
    for (int u = v; u < g.vertex_count(); ++u) {
      if (blocked[u]) continue;
      counts[size + 1] += 1;
      for (int x : g.neighbors(u)) ++blocked[x];
      ++blocked[u];
      self(self, u + 1, size + 1);
      --blocked[u];
      for (int x : g.neighbors(u)) --blocked[x];
    }
  };
  rec(rec, 0, 0);
  return Polynomial(std::move(counts));
}

namespace {

Polynomial poly_pow(const Polynomial& base, int exponent, int degree_cap) {
  if (exponent < 0) throw InputError("exponent must be non-negative");
  if (static_cast<long long>(std::max(base.degree(), 0)) * exponent > degree_cap)
    throw ResourceError("polynomial power exceeds degree cap");
  Polynomial acc = Polynomial::one();
  Polynomial sq = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) acc = acc * sq;
    e >>= 1;
    if (e > 0) sq = sq * sq;
  }
  return acc;
}

}  // namespace

Polynomial dary_tree_polynomial(int d, int k, int degree_cap) {
  if (d < 1) throw InputError("branching factor must be at least 1");
  if (k < 0) throw InputError("depth must be non-negative");
  Polynomial prev = Polynomial::one();                       // depth -1: empty
  Polynomial cur({BigInt(1), BigInt(1)});                    // depth 0: a vertex
  for (int i = 1; i <= k; ++i) {
    Polynomial next = poly_pow(cur, d, degree_cap) +
                      poly_pow(prev, d * d, degree_cap).shifted(1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial tree_independence_polynomial(const RootedTree& t) {
  int n = t.graph.vertex_count();
  std::vector<int> parent = t.parents();
  std::vector<int> order;
  order.reserve(n);
  order.push_back(t.root);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int v : t.graph.neighbors(order[i]))
      if (v != parent[order[i]]) order.push_back(v);
  // occupied[v] counts sets containing v, free[v] those avoiding it.
  std::vector<Polynomial> occupied(n), free_of(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    Polynomial with = Polynomial::one().shifted(1);
    Polynomial without = Polynomial::one();
    for (int c : t.graph.neighbors(v)) {
      if (c == parent[v]) continue;
      with = with * free_of[c];
      without = without * (occupied[c] + free_of[c]);
      occupied[c] = Polynomial();
      free_of[c] = Polynomial();
    }
    occupied[v] = std::move(with);
    free_of[v] = std::move(without);
  }
  return occupied[t.root] + free_of[t.root];
}

}  // namespace hardcore
