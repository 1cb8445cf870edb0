#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "longhole/bitset.hpp"

namespace longhole {

using Edge = std::pair<int, int>;

// Finite simple undirected graph on vertex ids 0..n-1. No self-loops, no
// parallel edges; adding an existing edge is a no-op. Treated as immutable
// once built: all algorithms take const Graph&.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return mat_[size_t(u) * n_ + v] != 0; }

  // Neighbors in ascending id order.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return int(adj_[v].size()); }
  int max_degree() const;

  // All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  Bitset neighbor_set(int v) const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && mat_ == o.mat_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<uint8_t> mat_;
};

// A subgraph together with the original ids of its vertices:
// local vertex i corresponds to original_ids[i].
struct SubgraphView {
  Graph graph;
  std::vector<int> original_ids;
};

// Induced subgraph on the given vertices (deduplicated, kept in ascending
// order).
SubgraphView induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Induced subgraph on V minus the given set.
SubgraphView remove_vertices(const Graph& g, const std::vector<int>& removed);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Separation (A, B): A cup B = V, no edge between A\B and B\A,
// order = |A cap B|.
struct Separation {
  std::vector<int> a;
  std::vector<int> b;
  int order = 0;
};

// nullopt when valid; otherwise a message naming the violated condition.
std::optional<std::string> validate_separation(const Graph& g,
                                               const Separation& s);

// True iff for every pair x, y in A cap B both G[A] and G[B] contain an
// x-y path with no internal vertex in A cap B.
bool is_tight_separation(const Graph& g, const Separation& s);

// A family of x-y paths that pairwise share only their endpoints.
struct PathSystem {
  int x = -1;
  int y = -1;
  std::vector<std::vector<int>> paths;
};

std::optional<std::string> validate_path_system(const Graph& g,
                                                const PathSystem& ps);

// True iff `path` is a simple path in g (consecutive adjacency, no repeats).
bool is_path_in_graph(const Graph& g, const std::vector<int>& path);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> coloring;   // 0/1 per vertex when bipartite
  std::vector<int> odd_walk;   // closed walk of odd length otherwise
};

BipartiteResult is_bipartite(const Graph& g);

}  // namespace longhole
