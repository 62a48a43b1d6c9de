#include "frank/random_graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "frank/connectivity.hpp"

namespace frank {
namespace {

// Unbiased draw from [0, bound) using only the engine's raw output, so the
// sequence does not depend on the standard library's distributions.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Graph random_cubic_3ec(std::size_t n, std::uint64_t seed,
                       std::size_t max_attempts) {
  if (n % 2 != 0) {
    throw Error("cubic graphs need an even number of vertices, got " +
                std::to_string(n));
  }
  if (n < 4) throw Error("cubic graphs need at least 4 vertices");

  std::mt19937_64 rng(seed);
  std::vector<Vertex> points(3 * n);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      points[i] = static_cast<Vertex>(i / 3);
    }
    for (std::size_t i = points.size() - 1; i > 0; --i) {
      std::swap(points[i], points[below(rng, i + 1)]);
    }
    std::set<std::pair<Vertex, Vertex>> pairs;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      auto [a, b] = std::minmax(points[i], points[i + 1]);
      simple = a != b && pairs.emplace(a, b).second;
    }
    if (!simple) continue;
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.push_back({a, b});
    Graph g(n, std::move(edges));
    if (edge_connectivity(g) == 3) return g;
  }
  throw LimitError("no simple 3-edge-connected cubic graph on " +
                   std::to_string(n) + " vertices after " +
                   std::to_string(max_attempts) + " pairings");
}

}  // namespace frank
