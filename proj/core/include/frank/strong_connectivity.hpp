#pragma once

#include <optional>
#include <vector>

#include "frank/graph.hpp"

namespace frank {

/// Every vertex reaches every other along arcs of `o`. Vacuously true for at
/// most one vertex. `without`, if set, names an arc treated as deleted.
bool is_strongly_connected(const Graph& g, const Orientation& o,
                           std::optional<EdgeId> without = std::nullopt);

/// Arcs whose single removal keeps `o` strongly connected, ascending.
/// Throws Error if `o` itself is not strongly connected.
std::vector<EdgeId> deletable_edges(const Graph& g, const Orientation& o);

}  // namespace frank
