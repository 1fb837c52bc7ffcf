#include "hardcore/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>

#include "hardcore/errors.hpp"

namespace hardcore {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges,
             int declared_max_degree) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge endpoint out of range: (" + std::to_string(u) +
                       ", " + std::to_string(v) + ") with n = " +
                       std::to_string(n));
    if (u == v)
      throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  int actual_max = 0;
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw InputError("parallel edge detected");
    actual_max = std::max(actual_max, static_cast<int>(list.size()));
    edge_count_ += static_cast<int>(list.size());
  }
  edge_count_ /= 2;
  if (declared_max_degree > 0 && declared_max_degree < actual_max)
    throw InputError("declared max degree " +
                     std::to_string(declared_max_degree) +
                     " below actual " + std::to_string(actual_max));
  max_degree_ = declared_max_degree > 0 ? declared_max_degree
                                        : std::max(1, actual_max);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw InputError("vertex " + std::to_string(v) + " out of range");
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::connected() const {
  int n = vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        queue.push_back(v);
      }
  }
  return reached == n;
}

bool Graph::is_tree() const {
  return connected() && edge_count_ == vertex_count() - 1;
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
  std::vector<int> out = g.neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> new_id(g.vertex_count(), -1);
  std::vector<int> sorted_keep = keep;
  std::sort(sorted_keep.begin(), sorted_keep.end());
  sorted_keep.erase(std::unique(sorted_keep.begin(), sorted_keep.end()),
                    sorted_keep.end());
  for (int i = 0; i < static_cast<int>(sorted_keep.size()); ++i) {
    int v = sorted_keep[i];
    if (v < 0 || v >= g.vertex_count())
      throw InputError("vertex " + std::to_string(v) + " out of range");
    new_id[v] = i;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (new_id[u] >= 0 && new_id[v] >= 0)
      edges.emplace_back(new_id[u], new_id[v]);
  return {Graph(static_cast<int>(sorted_keep.size()), std::move(edges)),
          std::move(sorted_keep)};
}

InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& victims) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (int v : victims) {
    if (v < 0 || v >= g.vertex_count())
      throw InputError("vertex " + std::to_string(v) + " out of range");
    gone[v] = 1;
  }
  std::vector<int> keep;
  keep.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::deque<int> queue{s};
    label[s] = id;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comps[id].push_back(u);
      for (int v : g.neighbors(u))
        if (label[v] < 0) {
          label[v] = id;
          queue.push_back(v);
        }
    }
    std::sort(comps[id].begin(), comps[id].end());
  }
  return comps;
}

RootedTree RootedTree::make(Graph g, int root) {
  if (root < 0 || root >= g.vertex_count())
    throw InputError("root " + std::to_string(root) + " out of range");
  if (!g.is_tree()) throw InputError("rooted tree requires a connected acyclic graph");
  return RootedTree{std::move(g), root};
}

std::vector<int> RootedTree::parents() const {
  int n = graph.vertex_count();
  std::vector<int> parent(n, -2);
  std::deque<int> queue{root};
  parent[root] = -1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : graph.neighbors(u))
      if (parent[v] == -2) {
        parent[v] = u;
        queue.push_back(v);
      }
  }
  return parent;
}

std::vector<std::vector<int>> RootedTree::children() const {
  std::vector<int> parent = parents();
  std::vector<std::vector<int>> out(graph.vertex_count());
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (parent[v] >= 0) out[parent[v]].push_back(v);
  return out;
}

int RootedTree::max_nonroot_children() const {
  auto kids = children();
  int best = 0;
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (v != root) best = std::max(best, static_cast<int>(kids[v].size()));
  return best;
}

RootedTree complete_dary_tree(int d, int k, std::int64_t vertex_cap) {
  if (d < 1) throw InputError("branching factor must be at least 1");
  if (k < 0) throw InputError("depth must be non-negative");
  std::int64_t count = 1, level = 1;
  for (int i = 0; i < k; ++i) {
    if (level > vertex_cap / d)
      throw ResourceError("complete tree would exceed vertex cap");
    level *= d;
    count += level;
    if (count > vertex_cap)
      throw ResourceError("complete tree would exceed vertex cap");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(count) - 1);
  int next = 1;
  std::deque<std::pair<int, int>> queue{{0, 0}};  // (vertex, depth)
  while (!queue.empty()) {
    auto [v, depth] = queue.front();
    queue.pop_front();
    if (depth == k) continue;
    for (int c = 0; c < d; ++c) {
      edges.emplace_back(v, next);
      queue.emplace_back(next, depth + 1);
      ++next;
    }
  }
  return RootedTree{Graph(static_cast<int>(count), std::move(edges)), 0};
}

namespace {

struct SawNode {
  int host_vertex;
  std::vector<std::unique_ptr<SawNode>> kids;
};

// Extends the walk ending at v (whose predecessor is pred).  Returns null
// when a closure pins v's subtree out of existence.
std::unique_ptr<SawNode> grow_saw(const Graph& g, int v, int pred,
                                  std::vector<int>& walk_pos,
                                  std::vector<int>& walk,
                                  std::int64_t& nodes, std::int64_t cap) {
  if (++nodes > cap) throw ResourceError("walk tree would exceed node cap");
  auto node = std::make_unique<SawNode>();
  node->host_vertex = v;
  for (int x : g.neighbors(v)) {
    if (x == pred) continue;
    if (walk_pos[x] >= 0) {
      // Cycle closure at x: compare the closing edge {v, x} with the edge
      // the walk used to leave x, ranking by far endpoint.
      int departed_to = walk[walk_pos[x] + 1];
      if (v > departed_to) return nullptr;  // pinned in: drop this branch
      continue;                             // pinned out: skip the closure
    }
    walk_pos[x] = static_cast<int>(walk.size());
    walk.push_back(x);
    auto child = grow_saw(g, x, v, walk_pos, walk, nodes, cap);
    walk.pop_back();
    walk_pos[x] = -1;
    if (child) node->kids.push_back(std::move(child));
  }
  return node;
}

}  // namespace

RootedTree saw_tree(const Graph& g, int start, std::int64_t node_cap) {
  if (start < 0 || start >= g.vertex_count())
    throw InputError("start vertex out of range");
  if (!g.connected()) throw InputError("walk tree requires a connected graph");
  std::vector<int> walk_pos(g.vertex_count(), -1);
  std::vector<int> walk{start};
  walk_pos[start] = 0;
  std::int64_t nodes = 0;
  auto root = grow_saw(g, start, -1, walk_pos, walk, nodes, node_cap);
  // The root cannot be pinned away: closures need a revisit, and the walk
  // begins there.
  std::vector<std::pair<int, int>> edges;
  int count = 0;
  std::deque<std::pair<const SawNode*, int>> queue{{root.get(), count++}};
  while (!queue.empty()) {
    auto [node, id] = queue.front();
    queue.pop_front();
    for (const auto& kid : node->kids) {
      edges.emplace_back(id, count);
      queue.emplace_back(kid.get(), count++);
    }
  }
  return RootedTree{Graph(count, std::move(edges), g.max_degree()), 0};
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph path_graph(int n) {
  if (n < 1) throw InputError("path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw InputError("leaf count must be non-negative");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, std::move(edges));
}

Graph random_connected_graph(int n, int extra_edges, int max_degree,
                             std::mt19937_64& rng) {
  if (n < 1) throw InputError("need at least one vertex");
  if (max_degree < 2 && n > 2)
    throw InputError("max degree below 2 cannot host a spanning tree");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> degree(n, 0);
  std::vector<std::pair<int, int>> edges;
  auto add = [&](int u, int v) {
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  };
  for (int i = 1; i < n; ++i) {
    // Attach to a random earlier vertex that still has degree headroom.
    std::vector<int> open;
    for (int j = 0; j < i; ++j)
      if (degree[order[j]] < max_degree) open.push_back(order[j]);
    if (open.empty()) throw InputError("degree cap too tight for a spanning tree");
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    add(open[pick(rng)], order[i]);
  }
  for (int t = 0; t < extra_edges; ++t) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int attempt = 0; attempt < 32; ++attempt) {
      int u = pick(rng), v = pick(rng);
      if (u == v || degree[u] >= max_degree || degree[v] >= max_degree) continue;
      bool dup = false;
      for (auto [a, b] : edges)
        if ((a == u && b == v) || (a == v && b == u)) dup = true;
      if (dup) continue;
      add(u, v);
      break;
    }
  }
  return Graph(n, std::move(edges));
}

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int declared_n = -1;
  int max_index = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "n") {
      long n = 0;
      std::string trailing;
      if (!(tokens >> n) || n < 0 || (tokens >> trailing))
        throw InputError("line " + std::to_string(line_no) +
                         ": malformed vertex count header");
      declared_n = static_cast<int>(n);
      continue;
    }
    long u = 0, v = 0;
    std::string trailing;
    try {
      std::size_t used = 0;
      u = std::stol(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected two vertex indices");
    }
    if (!(tokens >> v) || (tokens >> trailing))
      throw InputError("line " + std::to_string(line_no) +
                       ": expected two vertex indices");
    if (u < 0 || v < 0)
      throw InputError("line " + std::to_string(line_no) +
                       ": vertex indices must be non-negative");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_index = std::max(max_index, static_cast<int>(std::max(u, v)));
  }
  int n = declared_n >= 0 ? declared_n : max_index + 1;
  if (max_index >= n)
    throw InputError("edge index " + std::to_string(max_index) +
                     " exceeds declared vertex count " + std::to_string(n));
  try {
    return Graph(n, std::move(edges));
  } catch (const InputError& e) {
    throw InputError(std::string("edge list: ") + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto edges = g.edges();
  int max_index = -1;
  for (auto [u, v] : edges) max_index = std::max({max_index, u, v});
  if (max_index + 1 != g.vertex_count()) out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : edges) out << u << " " << v << "\n";
}

}  // namespace hardcore
