#include "longhole/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace longhole {

Graph::Graph(int n) : n_(n), adj_(n), mat_(size_t(n) * n, 0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (has_edge(u, v)) return;
  mat_[size_t(u) * n_ + v] = 1;
  mat_[size_t(v) * n_ + u] = 1;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

Bitset Graph::neighbor_set(int v) const {
  Bitset b(n_);
  for (int u : adj_[v]) b.set(u);
  return b;
}

SubgraphView induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> local(g.vertex_count(), -1);
  for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = int(i);
  Graph sub(int(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i) {
    for (int u : g.neighbors(verts[i])) {
      if (local[u] > int(i)) sub.add_edge(int(i), local[u]);
    }
  }
  return SubgraphView{std::move(sub), std::move(verts)};
}

SubgraphView remove_vertices(const Graph& g, const std::vector<int>& removed) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (int v : removed) gone[v] = 1;
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = int(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int u : g.neighbors(v)) {
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

std::optional<std::string> validate_separation(const Graph& g,
                                               const Separation& s) {
  int n = g.vertex_count();
  std::vector<char> in_a(n, 0), in_b(n, 0);
  for (int v : s.a) {
    if (v < 0 || v >= n) return "A contains out-of-range vertex";
    in_a[v] = 1;
  }
  for (int v : s.b) {
    if (v < 0 || v >= n) return "B contains out-of-range vertex";
    in_b[v] = 1;
  }
  for (int v = 0; v < n; ++v) {
    if (!in_a[v] && !in_b[v]) {
      return "vertex " + std::to_string(v) + " in neither side";
    }
  }
  int order = 0;
  for (int v = 0; v < n; ++v) {
    if (in_a[v] && in_b[v]) ++order;
  }
  if (order != s.order) {
    return "order field " + std::to_string(s.order) + " != |A cap B| = " +
           std::to_string(order);
  }
  for (auto [u, v] : g.edges()) {
    bool u_strict_a = in_a[u] && !in_b[u];
    bool v_strict_a = in_a[v] && !in_b[v];
    bool u_strict_b = in_b[u] && !in_a[u];
    bool v_strict_b = in_b[v] && !in_a[v];
    if ((u_strict_a && v_strict_b) || (u_strict_b && v_strict_a)) {
      return "edge {" + std::to_string(u) + "," + std::to_string(v) +
             "} crosses A\\B to B\\A";
    }
  }
  return std::nullopt;
}

namespace {

// x-y path inside g[side] whose internal vertices avoid `middle`.
bool side_path_avoiding(const Graph& g, const std::vector<int>& side,
                        const std::vector<char>& middle, int x, int y) {
  if (g.has_edge(x, y)) return true;
  int n = g.vertex_count();
  std::vector<char> in_side(n, 0);
  for (int v : side) in_side[v] = 1;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (u == y) return true;
      if (!seen[u] && in_side[u] && !middle[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return false;
}

}  // namespace

bool is_tight_separation(const Graph& g, const Separation& s) {
  int n = g.vertex_count();
  std::vector<char> in_a(n, 0), in_b(n, 0), middle(n, 0);
  for (int v : s.a) in_a[v] = 1;
  for (int v : s.b) in_b[v] = 1;
  std::vector<int> mid;
  for (int v = 0; v < n; ++v) {
    if (in_a[v] && in_b[v]) {
      middle[v] = 1;
      mid.push_back(v);
    }
  }
  for (size_t i = 0; i < mid.size(); ++i) {
    for (size_t j = i + 1; j < mid.size(); ++j) {
      if (!side_path_avoiding(g, s.a, middle, mid[i], mid[j])) return false;
      if (!side_path_avoiding(g, s.b, middle, mid[i], mid[j])) return false;
    }
  }
  return true;
}

bool is_path_in_graph(const Graph& g, const std::vector<int>& path) {
  if (path.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (size_t i = 0; i < path.size(); ++i) {
    int v = path[i];
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
  }
  return true;
}

std::optional<std::string> validate_path_system(const Graph& g,
                                                const PathSystem& ps) {
  std::vector<char> internal_used(g.vertex_count(), 0);
  for (size_t i = 0; i < ps.paths.size(); ++i) {
    const auto& p = ps.paths[i];
    if (!is_path_in_graph(g, p)) {
      return "path " + std::to_string(i) + " is not a simple path";
    }
    if (p.front() != ps.x || p.back() != ps.y) {
      return "path " + std::to_string(i) + " does not join x to y";
    }
    for (size_t j = 1; j + 1 < p.size(); ++j) {
      if (internal_used[p[j]]) {
        return "internal vertex " + std::to_string(p[j]) + " shared";
      }
      internal_used[p[j]] = 1;
    }
  }
  return std::nullopt;
}

BipartiteResult is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  BipartiteResult res;
  res.coloring.assign(n, -1);
  std::vector<int> parent(n, -1);
  for (int s = 0; s < n; ++s) {
    if (res.coloring[s] >= 0) continue;
    res.coloring[s] = 0;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int u : g.neighbors(v)) {
        if (res.coloring[u] < 0) {
          res.coloring[u] = 1 - res.coloring[v];
          parent[u] = v;
          queue.push_back(u);
        } else if (res.coloring[u] == res.coloring[v]) {
          // Same-color edge: walk both endpoints to the root, glue the
          // two tree paths with the offending edge into an odd closed walk
          // v .. root .. u, v.
          std::vector<int> up, down;
          for (int w = v; w >= 0; w = parent[w]) up.push_back(w);
          for (int w = u; w >= 0; w = parent[w]) down.push_back(w);
          res.odd_walk = up;
          for (int i = int(down.size()) - 2; i >= 0; --i) {
            res.odd_walk.push_back(down[i]);
          }
          res.odd_walk.push_back(v);
          res.bipartite = false;
          res.coloring.clear();
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  return res;
}

}  // namespace longhole
