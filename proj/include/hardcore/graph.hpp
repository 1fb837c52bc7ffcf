#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <utility>
#include <vector>

namespace hardcore {

// Simple undirected graph on vertices 0..n-1.  No self-loops, no parallel
// edges.  Adjacency lists are kept sorted so traversal order is
// deterministic.
class Graph {
 public:
  Graph() = default;
  // declared_max_degree <= 0 means "derive from the edges" (at least 1).
  Graph(int n, std::vector<std::pair<int, int>> edges,
        int declared_max_degree = 0);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  int max_degree() const { return max_degree_; }
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;
  bool has_edge(int u, int v) const;

  bool connected() const;
  bool is_tree() const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
  int max_degree_ = 1;
};

std::vector<int> closed_neighborhood(const Graph& g, int v);

// Induced subgraph after removing `victims`; original_index maps new vertex
// ids back to ids in the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_index;
};

InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& victims);
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

std::vector<std::vector<int>> connected_components(const Graph& g);

// A connected acyclic graph with a distinguished root.
struct RootedTree {
  Graph graph;
  int root = 0;

  static RootedTree make(Graph g, int root);

  // parent[v] in a BFS from the root; parent[root] == -1.
  std::vector<int> parents() const;
  std::vector<std::vector<int>> children() const;
  // Largest child count over non-root vertices (0 for a single vertex).
  int max_nonroot_children() const;
};

// Complete rooted tree of depth k where the root has d children and every
// other internal vertex has d children as well.  Vertices are numbered in
// BFS order, root = 0.
RootedTree complete_dary_tree(int d, int k,
                              std::int64_t vertex_cap = (std::int64_t{1} << 22));

// Self-avoiding-walk tree of g started at start, with cycle closures
// resolved by pinning: a closing edge ranked above the walk's departing edge
// at the revisited vertex forces the endpoint in, which prunes that branch
// entirely; ranked below, the closure is dropped.  Edges are ranked by the
// index of their far endpoint.  The result is a rooted tree whose max degree
// does not exceed the host's, and whose independence polynomial is an exact
// multiple of the host's.
RootedTree saw_tree(const Graph& g, int start,
                    std::int64_t node_cap = (std::int64_t{1} << 22));

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

// Connected graph on n vertices: a random spanning tree plus up to
// extra_edges additional edges, all degrees <= max_degree.
Graph random_connected_graph(int n, int extra_edges, int max_degree,
                             std::mt19937_64& rng);

// Text edge lists: one "u v" pair per line, '#' starts a comment, an
// optional "n COUNT" header pins the vertex count (needed for isolated
// vertices).  Without a header the count is 1 + the largest index seen.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace hardcore
