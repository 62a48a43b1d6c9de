#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "frank/graph.hpp"
#include "frank/random_graph.hpp"

namespace frank::testing {

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, std::move(edges));
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

inline Graph k33() {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 3; ++a) {
    for (Vertex b = 3; b < 6; ++b) edges.push_back({a, b});
  }
  return Graph(6, std::move(edges));
}

inline Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                   {0, 3}, {1, 4}, {2, 5}});
}

inline Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

/// Two triangles sharing vertex 0.
inline Graph bowtie() {
  return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// K4, K3,3, the prism, Petersen, and 200 random cubic 3-edge-connected
/// graphs with n cycling through 4, 6, ..., 16 and seeds 1000.. .
inline std::vector<NamedGraph> corpus() {
  std::vector<NamedGraph> out{{"K4", complete(4)},
                              {"K3,3", k33()},
                              {"prism", prism()},
                              {"Petersen", petersen()}};
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 4 + 2 * (i % 7);
    const std::uint64_t seed = 1000 + i;
    out.push_back({"cubic(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")",
                   random_cubic_3ec(n, seed)});
  }
  return out;
}

inline bool connected_without(const Graph& g, const std::vector<bool>& removed) {
  if (g.vertex_count() == 0) return true;
  std::vector<Vertex> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = g.vertex_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (removed[e]) continue;
    const Vertex a = find(g.edge(e).u);
    const Vertex b = find(g.edge(e).v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

/// Smallest number of edges whose removal disconnects g, by trying every
/// subset in order of size.
inline std::size_t brute_force_edge_connectivity(const Graph& g) {
  const std::size_t m = g.edge_count();
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      if (!connected_without(g, pick)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return m;
}

/// Random simple graph G(n, p) with a fixed seed.
inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (static_cast<double>(rng()) / static_cast<double>(rng.max()) < p) {
        edges.push_back({i, j});
      }
    }
  }
  return Graph(n, std::move(edges));
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace frank::testing
