#pragma once

#include <cstddef>
#include <vector>

#include "frank/graph.hpp"

namespace frank {

/// Pairwise edge-disjoint spanning trees of a multigraph, each listed as
/// ascending multigraph edge ids.
struct TreePacking {
  std::vector<std::vector<EdgeId>> trees;
};

/// Finds `k` edge-disjoint spanning trees by matroid-partition augmentation:
/// edges are inserted in ascending id order, each along a shortest exchange
/// path through the current forests (forests tried in index order).
///
/// Throws PackingError when no such packing exists; the error carries a
/// vertex partition crossed by fewer than k(p-1) edges, p being the number of
/// blocks.
TreePacking pack_spanning_trees(const Multigraph& g, std::size_t k);

}  // namespace frank
