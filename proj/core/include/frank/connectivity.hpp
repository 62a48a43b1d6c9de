#pragma once

#include <cstddef>
#include <vector>

#include "frank/graph.hpp"

namespace frank {

/// A minimum edge cut: `edges` are exactly the edges with one end on the
/// source side. `size == edges.size()` for simple graphs and multigraphs alike.
struct EdgeCut {
  std::size_t size = 0;
  std::vector<EdgeId> edges;
  std::vector<bool> source_side;
};

/// Global edge connectivity, via unit-capacity max flows from vertex 0 to
/// every other vertex. Throws GraphError for fewer than 2 vertices.
std::size_t edge_connectivity(const Graph& g);
std::size_t edge_connectivity(const Multigraph& g);

/// Same computation, returning the cut that attains the minimum.
EdgeCut minimum_edge_cut(const Graph& g);
EdgeCut minimum_edge_cut(const Multigraph& g);

/// Every edge of `g` twice; copies 2e and 2e+1 both have parent e.
Multigraph doubled(const Graph& g);

}  // namespace frank
