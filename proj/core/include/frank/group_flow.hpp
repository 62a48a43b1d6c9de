#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "frank/graph.hpp"
#include "frank/tree_packing.hpp"

namespace frank {

inline constexpr std::size_t kCoordinates = 3;

/// An element of Z2 x Z2 x Z2. Coordinate c (0-based) is bit c of the mask.
class Z2Cube {
 public:
  constexpr Z2Cube() = default;
  constexpr explicit Z2Cube(std::uint8_t mask) : mask_(mask & 7u) {}
  static constexpr Z2Cube from_bits(bool b0, bool b1, bool b2) {
    return Z2Cube(static_cast<std::uint8_t>((b0 ? 1 : 0) | (b1 ? 2 : 0) |
                                            (b2 ? 4 : 0)));
  }

  constexpr bool operator[](std::size_t coord) const {
    return (mask_ >> coord) & 1u;
  }
  constexpr std::uint8_t mask() const { return mask_; }
  constexpr bool is_zero() const { return mask_ == 0; }
  constexpr void set(std::size_t coord, bool on) {
    mask_ = static_cast<std::uint8_t>(on ? mask_ | (1u << coord)
                                         : mask_ & ~(1u << coord));
  }

  friend constexpr Z2Cube operator+(Z2Cube a, Z2Cube b) {
    return Z2Cube(static_cast<std::uint8_t>(a.mask_ ^ b.mask_));
  }
  friend constexpr bool operator==(Z2Cube, Z2Cube) = default;

 private:
  std::uint8_t mask_ = 0;
};

/// A Z2^3-valued flow indexed by EdgeId. Valid when nowhere-zero and, at every
/// vertex, each coordinate is set on an even number of incident edges.
struct GroupFlow {
  std::vector<Z2Cube> values;
};

/// Intermediate state of jaeger_flow, exposed for inspection in tests.
struct JaegerTrace {
  TreePacking packing;  // over doubled(g)
  std::array<std::vector<EdgeId>, kCoordinates> projected_trees;  // over g
};

/// Nowhere-zero Z2^3 flow of a 3-edge-connected graph from three
/// edge-disjoint spanning trees of the doubled graph: coordinate c is the
/// GF(2) sum of the fundamental cycles of every edge outside tree c.
/// Throws ConnectivityError (with a minimum cut) if lambda(g) < 3.
GroupFlow jaeger_flow(const Graph& g, JaegerTrace* trace = nullptr);

/// Throws Error when `f` is not indexed by g's edges.
bool verify_group_flow(const Graph& g, const GroupFlow& f);

struct CoverSearchOptions {
  std::size_t max_dimension = 10;
};

/// Exhaustive alternative: the lexicographically first triple (a <= b <= c)
/// of cycle-space elements, indexed by their coefficient masks over a
/// fundamental-cycle basis, whose supports cover E. Coordinate c of the result
/// is the c-th element of the triple.
/// Throws UncoveredEdgeError if some edge lies in no cycle (a bridge) and
/// LimitError if the cycle-space dimension exceeds the bound.
GroupFlow cover_search_flow(const Graph& g, const CoverSearchOptions& options = {});

/// |E| - |V| + (number of connected components).
std::size_t cycle_space_dimension(const Graph& g);

}  // namespace frank
