#pragma once

#include <optional>
#include <vector>

#include "longhole/graph.hpp"

namespace longhole {

struct MinCut {
  int size = 0;
  std::vector<int> cut;  // sorted, subset of V \ {x, y}
};

// Minimum x-y vertex cut via unit-capacity vertex splitting. Among minimum
// cuts the one closest to x is returned (residual reachability from x).
// Throws std::invalid_argument when x == y or xy is an edge.
MinCut min_vertex_cut(const Graph& g, int x, int y);

// Either exactly k internally disjoint x-y paths or a separation of order < k
// with x in A\B and y in B\A. Exactly one of the optionals is set.
struct MengerResult {
  std::optional<PathSystem> paths;
  std::optional<Separation> separation;
};

MengerResult menger_paths(const Graph& g, int x, int y, int k);

// All max-flow-many internally disjoint x-y paths (the Menger maximum).
PathSystem max_disjoint_paths(const Graph& g, int x, int y);

}  // namespace longhole
