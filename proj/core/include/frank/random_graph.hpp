#pragma once

#include <cstddef>
#include <cstdint>

#include "frank/graph.hpp"

namespace frank {

/// Random simple cubic graph with edge connectivity 3 on `n` vertices from
/// the pairing model, rejection-sampled. Edges are sorted lexicographically.
/// Deterministic in (n, seed) on every platform.
/// Throws Error for odd n or n < 4, LimitError when `max_attempts` pairings
/// are all rejected.
Graph random_cubic_3ec(std::size_t n, std::uint64_t seed,
                       std::size_t max_attempts = 100000);

}  // namespace frank
