#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frank/circuits.hpp"
#include "frank/graph.hpp"
#include "frank/group_flow.hpp"
#include "frank/superpose.hpp"

namespace frank {

inline constexpr std::size_t kMaxOrientations = 5;

/// The flow an orientation was read off from.
struct Provenance {
  ValueSchedule schedule;
  std::vector<int> values;
};

/// Strongly connected orientations plus, for every edge, the index of an
/// orientation in which that edge's arc is deletable. Provenance is either
/// empty or has one entry per orientation.
struct Certificate {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<Orientation> orientations;
  std::vector<std::size_t> witness;
  std::vector<Provenance> provenance;
};

struct CertifyOptions {
  /// Drop orientations whose witnessed arcs are all deletable elsewhere.
  bool shrink = true;
  /// At most kMaxOrientations schedules. With the standard five, every edge
  /// is guaranteed value 1 somewhere; other lists fall back to direct
  /// deletability tests for edges no flow gives value 1.
  std::vector<ValueSchedule> schedules = standard_schedules();
};

/// Everything build_certificate computed before shrinking.
struct CertificateTrace {
  GroupFlow group_flow;
  CircuitOrientation reference;
  std::vector<IntFlow> flows;               // one per schedule
  std::vector<std::size_t> value_one_witness;  // lowest schedule with value 1,
                                               // or flows.size() if none
};

/// Z2^3 flow -> reference circuit orientations -> one all-positive flow per
/// schedule -> each edge witnessed by the first flow giving it value 1.
///
/// Throws ConnectivityError if lambda(g) < 3, ScheduleError for inadmissible
/// schedules, UncoveredEdgeError if a non-standard schedule list leaves an
/// edge unwitnessed, and InvariantError if the result fails validation.
Certificate build_certificate(const Graph& g, const CertifyOptions& options = {},
                              CertificateTrace* trace = nullptr);

struct Report {
  struct OrientationCheck {
    bool well_formed = false;  // one direction per edge
    bool strongly_connected = false;
  };
  struct EdgeFailure {
    EdgeId edge;
    std::optional<std::size_t> orientation;
    std::string reason;
  };

  bool graph_matches = false;  // n and m agree with the graph
  bool size_ok = false;        // at most kMaxOrientations
  std::vector<OrientationCheck> orientations;
  std::vector<EdgeFailure> edge_failures;
  bool pass = false;
};

/// Checks a certificate against the definition alone; never throws for a
/// bad certificate.
Report validate_certificate(const Graph& g, const Certificate& c);

}  // namespace frank
