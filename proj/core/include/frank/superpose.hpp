#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frank/circuits.hpp"
#include "frank/graph.hpp"
#include "frank/group_flow.hpp"

namespace frank {

/// Positive values sent along o_1, o_2, o_3, with an optional reversal of each
/// reference orientation.
struct ValueSchedule {
  std::array<int, kCoordinates> values{};
  std::array<bool, kCoordinates> reversed{};
  std::string name;

  friend bool operator==(const ValueSchedule&, const ValueSchedule&) = default;
};

/// The five schedules of the five-orientation construction, in order:
///   S1 (1,2,4)             S2 (4,2,3)          S3 (4,2,3) o_3 reversed
///   S4 (2,1,4) o_2 reversed                    S5 (2,4,1) o_2 reversed
std::vector<ValueSchedule> standard_schedules();

/// True iff every value is positive and no signed sum over two or three
/// coordinates vanishes. (1,2,3) fails: 1 + 2 - 3 = 0.
bool is_admissible(const ValueSchedule& s);

/// Parses "v1,v2,v3" or "v1,v2,v3,r1r2r3" where each r is 0 or 1.
/// Throws ParseError; admissibility is not checked here.
ValueSchedule parse_schedule(std::string_view text);
std::string format_schedule(const ValueSchedule& s);

/// An all-positive integer flow over every edge.
struct IntFlow {
  Orientation orientation;
  std::vector<int> value;
};

/// Signed superposition on one edge: sum over coordinates c with bits[c] of
/// sign[c] * values[c], each sign flipped when coordinate c is reversed.
/// Positive means the final arc runs u->v.
int superpose_edge(Z2Cube bits, const std::array<std::int8_t, kCoordinates>& sign,
                   const ValueSchedule& s);

/// Combines the reference orientations under `s`. Throws ScheduleError for an
/// inadmissible schedule and UncoveredEdgeError if some edge is in no
/// coordinate subgraph.
IntFlow superpose(const Graph& g, const CircuitOrientation& co,
                  const ValueSchedule& s);

/// Positive values and exact conservation at every vertex.
bool verify_int_flow(const Graph& g, const IntFlow& f);

std::vector<EdgeId> value_one_edges(const IntFlow& f);

/// Whether two coordinates orient an edge the same way; engaged exactly for
/// pairs of coordinates that both contain the edge.
struct DirectionAgreement {
  std::optional<bool> same01;
  std::optional<bool> same02;
  std::optional<bool> same12;
};

DirectionAgreement direction_agreement(const CircuitOrientation& co, EdgeId e);

/// Case table for the first schedule (1,2,4). Rows are numbered 1..13 from
/// (1,0,0) down to the last (1,1,1) case.
struct Table1Outcome {
  std::size_t row;
  std::size_t direction_source;  // coordinate whose direction the arc takes
  int value;
};

/// Throws Error when `bits` is zero or the agreement pattern does not fit
/// `bits` (missing or extra pairs, or an impossible triangle).
Table1Outcome classify_edge_table1(Z2Cube bits, const DirectionAgreement& a);

}  // namespace frank
