#include "frank/certificate.hpp"

#include <algorithm>

#include "frank/connectivity.hpp"
#include "frank/strong_connectivity.hpp"

namespace frank {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Removes orientations, latest first, whose witnessed arcs can all be
// re-witnessed by deletable arcs of the orientations that remain.
void shrink(const Graph& g, Certificate& cert) {
  const std::size_t k = cert.orientations.size();
  std::vector<std::vector<bool>> deletable(k, std::vector<bool>(g.edge_count()));
  for (std::size_t i = 0; i < k; ++i) {
    for (EdgeId e : deletable_edges(g, cert.orientations[i])) deletable[i][e] = true;
  }
  std::vector<bool> alive(k, true);
  for (std::size_t j = k; j-- > 0;) {
    std::vector<std::pair<EdgeId, std::size_t>> moves;
    bool possible = true;
    for (EdgeId e = 0; e < g.edge_count() && possible; ++e) {
      if (cert.witness[e] != j) continue;
      std::size_t target = kNone;
      for (std::size_t i = 0; i < k; ++i) {
        if (i != j && alive[i] && deletable[i][e]) {
          target = i;
          break;
        }
      }
      if (target == kNone) possible = false;
      moves.emplace_back(e, target);
    }
    if (!possible) continue;
    alive[j] = false;
    for (auto [e, target] : moves) cert.witness[e] = target;
  }

  std::vector<std::size_t> renumber(k, kNone);
  Certificate kept{cert.vertex_count, cert.edge_count, {}, cert.witness, {}};
  for (std::size_t i = 0; i < k; ++i) {
    if (!alive[i]) continue;
    renumber[i] = kept.orientations.size();
    kept.orientations.push_back(std::move(cert.orientations[i]));
    if (!cert.provenance.empty()) kept.provenance.push_back(std::move(cert.provenance[i]));
  }
  for (std::size_t& w : kept.witness) w = renumber[w];
  cert = std::move(kept);
}

}  // namespace

Certificate build_certificate(const Graph& g, const CertifyOptions& options,
                              CertificateTrace* trace) {
  if (options.schedules.empty() || options.schedules.size() > kMaxOrientations) {
    throw Error("between 1 and " + std::to_string(kMaxOrientations) +
                " schedules are required");
  }
  for (const ValueSchedule& s : options.schedules) {
    if (!is_admissible(s)) {
      throw ScheduleError("schedule " + format_schedule(s) + " is not admissible");
    }
  }

  CertificateTrace local;
  CertificateTrace& t = trace ? *trace : local;
  t.group_flow = jaeger_flow(g);  // throws ConnectivityError below lambda 3
  t.reference = build_reference_orientations(g, t.group_flow);
  t.flows.clear();

  Certificate cert;
  cert.vertex_count = g.vertex_count();
  cert.edge_count = g.edge_count();
  for (const ValueSchedule& s : options.schedules) {
    IntFlow flow = superpose(g, t.reference, s);
    if (!verify_int_flow(g, flow)) {
      throw InvariantError("superposition under " + s.name +
                           " violates conservation");
    }
    if (!is_strongly_connected(g, flow.orientation)) {
      throw InvariantError("orientation from " + s.name +
                           " is not strongly connected");
    }
    cert.orientations.push_back(flow.orientation);
    cert.provenance.push_back({s, flow.value});
    t.flows.push_back(std::move(flow));
  }

  const std::size_t k = t.flows.size();
  t.value_one_witness.assign(g.edge_count(), k);
  cert.witness.assign(g.edge_count(), kNone);
  std::vector<EdgeId> uncovered;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (std::size_t i = 0; i < k; ++i) {
      if (t.flows[i].value[e] == 1) {
        t.value_one_witness[e] = i;
        cert.witness[e] = i;
        break;
      }
    }
    if (cert.witness[e] == kNone) uncovered.push_back(e);
  }

  if (!uncovered.empty()) {
    if (options.schedules == standard_schedules()) {
      throw InvariantError("standard schedules left edge " +
                           std::to_string(uncovered.front()) +
                           " without a value-1 arc");
    }
    std::vector<std::vector<EdgeId>> deletable;
    for (const Orientation& o : cert.orientations) {
      deletable.push_back(deletable_edges(g, o));
    }
    std::vector<EdgeId> still;
    for (EdgeId e : uncovered) {
      for (std::size_t i = 0; i < k; ++i) {
        if (std::binary_search(deletable[i].begin(), deletable[i].end(), e)) {
          cert.witness[e] = i;
          break;
        }
      }
      if (cert.witness[e] == kNone) still.push_back(e);
    }
    if (!still.empty()) {
      std::string message = "edge " + std::to_string(still.front()) +
                            " is deletable in none of the orientations";
      throw UncoveredEdgeError(std::move(message), std::move(still));
    }
  }

  if (options.shrink) shrink(g, cert);

  const Report report = validate_certificate(g, cert);
  if (!report.pass) {
    throw InvariantError("constructed certificate failed validation");
  }
  return cert;
}

Report validate_certificate(const Graph& g, const Certificate& c) {
  Report r;
  r.graph_matches =
      c.vertex_count == g.vertex_count() && c.edge_count == g.edge_count();
  r.size_ok = c.orientations.size() <= kMaxOrientations;
  for (const Orientation& o : c.orientations) {
    Report::OrientationCheck check;
    check.well_formed = o.size() == g.edge_count();
    check.strongly_connected = check.well_formed && is_strongly_connected(g, o);
    r.orientations.push_back(check);
  }

  if (c.witness.size() != g.edge_count()) {
    r.edge_failures.push_back(
        {0, std::nullopt,
         "witness list has " + std::to_string(c.witness.size()) +
             " entries for " + std::to_string(g.edge_count()) + " edges"});
  } else {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const std::size_t w = c.witness[e];
      if (w >= c.orientations.size()) {
        r.edge_failures.push_back({e, std::nullopt, "witness index out of range"});
      } else if (!r.orientations[w].strongly_connected) {
        r.edge_failures.push_back(
            {e, w, "witness orientation is not strongly connected"});
      } else if (!is_strongly_connected(g, c.orientations[w], e)) {
        r.edge_failures.push_back({e, w, "arc is not deletable"});
      }
    }
  }

  const bool all_strong =
      std::all_of(r.orientations.begin(), r.orientations.end(),
                  [](const auto& o) { return o.strongly_connected; });
  r.pass = r.graph_matches && r.size_ok && all_strong && r.edge_failures.empty();
  return r;
}

}  // namespace frank
