// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "frank/certificate.hpp"
#include "frank/circuits.hpp"
#include "frank/connectivity.hpp"
#include "frank/group_flow.hpp"
#include "frank/oracle.hpp"
#include "frank/strong_connectivity.hpp"
#include "frank/superpose.hpp"
#include "support/graphs.hpp"

using namespace frank;
using namespace frank::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// Schedule (0-based, S1..S5) that gives each case-table row value 1. Rows
// 1, 5 and 13 already have value 1 under S1; the rest follow the cross-table.
const std::map<std::size_t, std::size_t> kClearingSchedule{
    {1, 0}, {2, 3}, {3, 4}, {4, 3}, {5, 0}, {6, 2}, {7, 1},
    {8, 2}, {9, 1}, {10, 4}, {11, 1}, {12, 2}, {13, 0}};

const std::array<int, 5> kMaxValue{7, 9, 9, 7, 7};

Verdict ac1_certificates(const std::vector<NamedGraph>& corpus) {
  Verdict v;
  double worst = 0;
  for (const auto& [name, g] : corpus) {
    const auto t0 = Clock::now();
    try {
      const Certificate c = build_certificate(g);
      const Report r = validate_certificate(g, c);
      v.require(c.orientations.size() <= kMaxOrientations, name + ": more than 5 orientations");
      v.require(c.witness.size() == g.edge_count(), name + ": witness coverage");
      v.require(std::all_of(r.orientations.begin(), r.orientations.end(),
                            [](const auto& o) { return o.strongly_connected; }),
                name + ": orientation not strongly connected");
      v.require(r.pass, name + ": validation failed");
    } catch (const std::exception& e) {
      v.require(false, name + ": " + e.what());
    }
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    v.require(dt < 1.0, name + ": took " + std::to_string(dt) + " s");
  }
  v.detail << corpus.size() << " graphs, slowest " << worst << " s";
  return v;
}

Verdict ac2_cross_table(const std::vector<NamedGraph>& corpus) {
  Verdict v;
  std::size_t edges = 0;
  std::size_t uncovered = 0;
  std::array<std::size_t, 14> rows_seen{};
  for (const auto& [name, g] : corpus) {
    CertificateTrace trace;
    build_certificate(g, {.shrink = false}, &trace);
    for (EdgeId e = 0; e < g.edge_count(); ++e, ++edges) {
      const std::size_t w = trace.value_one_witness[e];
      if (w >= trace.flows.size()) {
        ++uncovered;
        continue;
      }
      Z2Cube bits;
      for (std::size_t c = 0; c < kCoordinates; ++c) {
        bits.set(c, trace.reference.coordinates[c].contains(e));
      }
      const Table1Outcome row =
          classify_edge_table1(bits, direction_agreement(trace.reference, e));
      ++rows_seen[row.row];
      v.require(kClearingSchedule.at(row.row) == w,
                name + ": edge " + std::to_string(e) + " in row " +
                    std::to_string(row.row) + " witnessed by S" + std::to_string(w + 1));
    }
  }
  v.require(uncovered == 0, std::to_string(uncovered) + " edges without a value-1 arc");
  v.detail << edges << " edges, " << uncovered << " uncovered; rows seen:";
  for (std::size_t r = 1; r <= 13; ++r) v.detail << ' ' << r << ':' << rows_seen[r];
  return v;
}

Verdict ac3_flow_bounds(const std::vector<NamedGraph>& corpus) {
  Verdict v;
  std::array<int, 5> seen_max{};
  for (const auto& [name, g] : corpus) {
    const CircuitOrientation co = build_reference_orientations(g, jaeger_flow(g));
    const auto schedules = standard_schedules();
    for (std::size_t j = 0; j < schedules.size(); ++j) {
      const IntFlow f = superpose(g, co, schedules[j]);
      v.require(verify_int_flow(g, f), name + ": conservation under S" + std::to_string(j + 1));
      for (int x : f.value) {
        v.require(x >= 1 && x <= kMaxValue[j],
                  name + ": value " + std::to_string(x) + " under S" + std::to_string(j + 1));
        seen_max[j] = std::max(seen_max[j], x);
      }
    }
  }
  v.detail << "max values S1..S5:";
  for (int m : seen_max) v.detail << ' ' << m;
  return v;
}

Verdict ac4_lemma(const std::vector<NamedGraph>& corpus) {
  Verdict v;
  std::size_t arcs = 0;
  std::size_t counterexamples = 0;
  for (const auto& [name, g] : corpus) {
    CertificateTrace trace;
    build_certificate(g, {.shrink = false}, &trace);
    for (const IntFlow& f : trace.flows) {
      for (EdgeId e : value_one_edges(f)) {
        ++arcs;
        if (!is_strongly_connected(g, f.orientation, e)) ++counterexamples;
      }
    }
  }
  v.require(counterexamples == 0, std::to_string(counterexamples) + " counterexamples");
  v.detail << arcs << " value-1 arcs re-tested, " << counterexamples << " counterexamples";
  return v;
}

Verdict ac5_exact() {
  Verdict v;
  const std::vector<std::pair<NamedGraph, std::size_t>> cases{
      {{"K5", complete(5)}, 1}, {{"K4", complete(4)}, 2},
      {{"K3,3", k33()}, 2}, {{"Petersen", petersen()}, 3}};
  for (const auto& [ng, expected] : cases) {
    const auto t0 = Clock::now();
    const std::size_t f = frank_number(ng.graph).frank_number;
    const double dt = seconds_since(t0);
    v.require(f == expected, ng.name + ": got " + std::to_string(f));
    if (ng.name == "Petersen") v.require(dt < 300.0, "Petersen took too long");
    v.detail << ng.name << "=" << f << " (" << dt << " s) ";
  }
  return v;
}

Verdict ac6_sandwich(const std::vector<NamedGraph>& corpus) {
  Verdict v;
  std::size_t checked = 0;
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& [name, g] : corpus) {
    if (g.edge_count() > 16 || edge_connectivity(g) != 3) continue;
    const std::size_t f = frank_number(g).frank_number;
    const std::size_t c = build_certificate(g).orientations.size();
    v.require(2 <= f && f <= c && c <= 5,
              name + ": F=" + std::to_string(f) + " certificate=" + std::to_string(c));
    ++histogram[f];
    ++checked;
  }
  v.detail << checked << " graphs; F histogram:";
  for (auto [f, n] : histogram) v.detail << " F=" << f << ":" << n;
  return v;
}

Verdict ac7_flows(const std::vector<NamedGraph>& corpus) {
  Verdict v;
  std::size_t jaeger = 0;
  std::size_t cover = 0;
  for (const auto& [name, g] : corpus) {
    v.require(verify_group_flow(g, jaeger_flow(g)), name + ": jaeger flow invalid");
    ++jaeger;
    if (cycle_space_dimension(g) <= 8) {
      try {
        v.require(verify_group_flow(g, cover_search_flow(g)), name + ": cover flow invalid");
        ++cover;
      } catch (const std::exception& e) {
        v.require(false, name + ": cover search failed: " + e.what());
      }
    }
  }
  v.detail << jaeger << " constructed flows, " << cover << " exhaustive-search flows";
  return v;
}

Verdict ac8_admissibility(const std::vector<NamedGraph>& corpus) {
  Verdict v;
  v.require(!is_admissible({{1, 2, 3}, {}, ""}), "(1,2,3) accepted");
  for (const auto& s : standard_schedules()) v.require(is_admissible(s), s.name + " rejected");

  std::size_t schedules = 0;
  std::size_t zeros = 0;
  std::vector<ValueSchedule> admissible;
  for (int a = 1; a <= 12; ++a) {
    for (int b = 1; b <= 12; ++b) {
      for (int c = 1; c <= 12; ++c) {
        for (int rev = 0; rev < 8; ++rev) {
          const ValueSchedule s{{a, b, c}, {bool(rev & 1), bool(rev & 2), bool(rev & 4)}, ""};
          if (!is_admissible(s)) continue;
          ++schedules;
          if (rev == 0 && admissible.size() < 200) admissible.push_back(s);
          for (std::uint8_t mask = 1; mask < 8; ++mask) {
            for (int pattern = 0; pattern < 8; ++pattern) {
              std::array<std::int8_t, kCoordinates> sign{};
              for (std::size_t k = 0; k < kCoordinates; ++k) {
                sign[k] = (mask >> k & 1) ? ((pattern >> k & 1) ? -1 : 1) : 0;
              }
              if (superpose_edge(Z2Cube(mask), sign, s) == 0) ++zeros;
            }
          }
        }
      }
    }
  }
  // Whole-graph superpositions under a sample of admissible schedules.
  for (std::size_t i = 0; i < corpus.size(); i += 10) {
    const Graph& g = corpus[i].graph;
    const CircuitOrientation co = build_reference_orientations(g, jaeger_flow(g));
    for (std::size_t k = 0; k < admissible.size(); k += 7) {
      const IntFlow f = superpose(g, co, admissible[k]);
      v.require(verify_int_flow(g, f), corpus[i].name + ": custom schedule flow invalid");
    }
  }
  v.require(zeros == 0, std::to_string(zeros) + " zero values");
  v.detail << schedules << " admissible schedules x 56 sign patterns, " << zeros << " zeros";
  return v;
}

Verdict ac9_connectivity(const std::vector<NamedGraph>& corpus) {
  Verdict v;
  std::size_t checked = 0;
  auto check = [&](const std::string& name, const Graph& g) {
    if (g.edge_count() > 12 || g.vertex_count() < 2) return;
    v.require(edge_connectivity(g) == brute_force_edge_connectivity(g), name);
    ++checked;
  };
  for (const auto& [name, g] : corpus) check(name, g);
  check("triangle", cycle(3));
  check("C6", cycle(6));
  check("P5", path(5));
  check("bowtie", bowtie());
  check("K5", complete(5));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    check("gnp" + std::to_string(seed), random_gnp(3 + seed % 6, 0.55, seed));
  }
  v.detail << checked << " graphs with at most 12 edges";
  return v;
}

}  // namespace

int main() {
  const auto graphs = frank::testing::corpus();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"AC1 certificate of <=5 strongly connected orientations, validated, <1 s/graph",
       [&] { return ac1_certificates(graphs); }},
      {"AC2 value-1 coverage and cross-table witnesses (no shrink)",
       [&] { return ac2_cross_table(graphs); }},
      {"AC3 flow values 1..7 / 1..9 / 1..9 / 1..7 / 1..7, exact conservation",
       [&] { return ac3_flow_bounds(graphs); }},
      {"AC4 every value-1 arc is deletable", [&] { return ac4_lemma(graphs); }},
      {"AC5 exact Frank numbers K5=1 K4=2 K3,3=2 Petersen=3 (<5 min)", [] { return ac5_exact(); }},
      {"AC6 2 <= F(G) <= certificate size <= 5 on graphs with <=16 edges",
       [&] { return ac6_sandwich(graphs); }},
      {"AC7 constructed and exhaustive-search flows both verify",
       [&] { return ac7_flows(graphs); }},
      {"AC8 admissibility and zero-free superposition", [&] { return ac8_admissibility(graphs); }},
      {"AC9 edge connectivity equals brute force on graphs with <=12 edges",
       [&] { return ac9_connectivity(graphs); }},
  };

  int failures = 0;
  for (const auto& [label, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "exception: " << e.what();
    }
    std::printf("[%s] %s -- %s\n", v.pass ? "PASS" : "FAIL", label.c_str(),
                v.detail.str().c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
