#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "frank/graph.hpp"

namespace frank {

struct OracleOptions {
  std::size_t max_edges = 16;
  std::size_t k_max = 7;
  /// Keep only inclusion-maximal deletable sets before the cover search.
  bool prune_to_maximal = true;
};

/// All strongly connected orientations, in lexicographic order of the
/// direction sequence (edge 0 first, backward before forward).
/// Throws LimitError when |E| exceeds options.max_edges.
std::vector<Orientation> enumerate_strong_orientations(
    const Graph& g, const OracleOptions& options = {});

/// Deletable arc sets of the strongly connected orientations, as bitmasks
/// over EdgeId: deduplicated, sorted, and (optionally) pruned to maximal sets.
struct DeletableProfile {
  std::vector<std::uint64_t> masks;
  std::size_t strong_orientations = 0;
};

DeletableProfile deletable_profile(const Graph& g,
                                   const OracleOptions& options = {});

struct FrankResult {
  std::size_t frank_number = 0;
  std::size_t strong_orientations = 0;
  std::size_t distinct_masks = 0;
};

/// Exact Frank number: the fewest deletable sets (exact branch and bound over
/// the profile, branching on the lowest uncovered edge) whose union is E.
/// Throws ConnectivityError if lambda(g) < 3, LimitError if the edge bound is
/// exceeded, UncoveredEdgeError if no cover of size <= k_max exists.
FrankResult frank_number(const Graph& g, const OracleOptions& options = {});

/// Smallest cover size of `universe` by `masks`, or 0 if none within k_max.
std::size_t minimum_cover(const std::vector<std::uint64_t>& masks,
                          std::uint64_t universe, std::size_t k_max);

}  // namespace frank
