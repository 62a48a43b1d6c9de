#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "frank/graph.hpp"
#include "frank/group_flow.hpp"

namespace frank {

struct CircuitStep {
  EdgeId edge;
  bool forward;  // traversed u->v for the stored pair
};

/// A directed cycle as consecutive steps; the head of each step is the tail of
/// the next, and the last step returns to the first tail.
using Circuit = std::vector<CircuitStep>;

/// The oriented circuit decomposition of one coordinate subgraph.
/// sign[e] is +1 (u->v), -1 (v->u), or 0 when e is outside the subgraph.
struct CoordinateOrientation {
  std::vector<Circuit> circuits;
  std::vector<std::int8_t> sign;

  bool contains(EdgeId e) const { return sign.at(e) != 0; }
};

/// Reference orientations o_1, o_2, o_3 (indices 0..2).
struct CircuitOrientation {
  std::array<CoordinateOrientation, kCoordinates> coordinates;
};

/// Edges whose value has bit `coord` (0-based) set, ascending.
std::vector<EdgeId> coordinate_subgraph(const Graph& g, const GroupFlow& f,
                                        std::size_t coord);

/// Splits an even edge set into edge-disjoint directed cycles. Each walk
/// starts at the lower endpoint of the lowest unused edge and always leaves
/// along the lowest unused incident edge; a cycle is emitted whenever the walk
/// revisits a vertex on its current path.
/// Throws OddDegreeError naming the first vertex of odd degree.
std::vector<Circuit> decompose_circuits(const Graph& g,
                                        std::span<const EdgeId> edges);

CircuitOrientation build_reference_orientations(const Graph& g,
                                                const GroupFlow& f);

/// Vertex sequence of a circuit, first vertex not repeated at the end.
std::vector<Vertex> circuit_vertices(const Graph& g, const Circuit& c);

}  // namespace frank
