#include "frank/circuits.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace frank {

std::vector<EdgeId> coordinate_subgraph(const Graph& g, const GroupFlow& f,
                                        std::size_t coord) {
  if (coord >= kCoordinates) {
    throw Error("coordinate index " + std::to_string(coord) +
                " out of range 0..2");
  }
  if (f.values.size() != g.edge_count()) {
    throw Error("flow is not indexed by the graph's edges");
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (f.values[e][coord]) out.push_back(e);
  }
  return out;
}

std::vector<Circuit> decompose_circuits(const Graph& g,
                                        std::span<const EdgeId> edges) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> member(g.edge_count(), false);
  std::vector<std::size_t> degree(n, 0);
  for (EdgeId e : edges) {
    if (member.at(e)) throw Error("edge " + std::to_string(e) + " listed twice");
    member[e] = true;
    ++degree[g.edge(e).u];
    ++degree[g.edge(e).v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] % 2 != 0) {
      throw OddDegreeError("vertex " + std::to_string(v) + " has odd degree " +
                               std::to_string(degree[v]) + " in the edge set",
                           v);
    }
  }

  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::size_t> cursor(n, 0);  // incidence scan position per vertex
  auto next_unused = [&](Vertex v) -> const Incidence* {
    const auto inc = g.incident(v);
    while (cursor[v] < inc.size() &&
           (!member[inc[cursor[v]].edge] || used[inc[cursor[v]].edge])) {
      ++cursor[v];
    }
    return cursor[v] < inc.size() ? &inc[cursor[v]] : nullptr;
  };

  constexpr std::size_t kOff = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> on_path(n, kOff);  // position in `path`, if any
  std::vector<Vertex> path;
  std::vector<CircuitStep> steps;  // steps[i] leaves path[i]
  std::vector<Circuit> circuits;

  std::vector<EdgeId> order(edges.begin(), edges.end());
  std::sort(order.begin(), order.end());
  for (EdgeId seed : order) {
    if (used[seed]) continue;
    const Vertex start = g.edge(seed).u;
    path.assign(1, start);
    steps.clear();
    on_path[start] = 0;
    while (!path.empty()) {
      const Vertex x = path.back();
      const Incidence* inc = next_unused(x);
      if (!inc) {
        // Only the path root can run out: every other path vertex has odd
        // remaining degree.
        if (path.size() != 1) throw InvariantError("circuit walk got stuck");
        on_path[x] = kOff;
        path.pop_back();
        continue;
      }
      used[inc->edge] = true;
      steps.push_back({inc->edge, g.edge(inc->edge).u == x});
      const Vertex y = inc->neighbor;
      if (on_path[y] == kOff) {
        on_path[y] = path.size();
        path.push_back(y);
        continue;
      }
      const std::size_t at = on_path[y];
      circuits.emplace_back(steps.begin() + static_cast<std::ptrdiff_t>(at),
                            steps.end());
      steps.resize(at);
      for (std::size_t i = at + 1; i < path.size(); ++i) on_path[path[i]] = kOff;
      path.resize(at + 1);
    }
  }
  return circuits;
}

CircuitOrientation build_reference_orientations(const Graph& g,
                                                const GroupFlow& f) {
  CircuitOrientation co;
  for (std::size_t c = 0; c < kCoordinates; ++c) {
    CoordinateOrientation& coord = co.coordinates[c];
    coord.circuits = decompose_circuits(g, coordinate_subgraph(g, f, c));
    coord.sign.assign(g.edge_count(), 0);
    for (const Circuit& circuit : coord.circuits) {
      for (const CircuitStep& s : circuit) {
        coord.sign[s.edge] = s.forward ? 1 : -1;
      }
    }
  }
  return co;
}

std::vector<Vertex> circuit_vertices(const Graph& g, const Circuit& c) {
  std::vector<Vertex> out;
  out.reserve(c.size());
  for (const CircuitStep& s : c) {
    const Edge& e = g.edge(s.edge);
    out.push_back(s.forward ? e.u : e.v);
  }
  return out;
}

}  // namespace frank
