#include "frank/json.hpp"

#include <string>

namespace frank {

using nlohmann::json;

json group_flow_to_json(const Graph& g, const GroupFlow& f) {
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Z2Cube b = f.values.at(e);
    edges.push_back({{"id", e},
                     {"u", g.edge(e).u},
                     {"v", g.edge(e).v},
                     {"bits", {int(b[0]), int(b[1]), int(b[2])}}});
  }
  return {{"edges", std::move(edges)}};
}

json certificate_to_json(const Certificate& c) {
  json orientations = json::array();
  for (const Orientation& o : c.orientations) {
    json dirs = json::array();
    for (bool d : o.directions()) dirs.push_back(d);
    orientations.push_back(std::move(dirs));
  }
  json out = {{"n", c.vertex_count},
              {"m", c.edge_count},
              {"orientations", std::move(orientations)},
              {"witness", c.witness}};
  json provenance = json::array();
  for (const Provenance& p : c.provenance) {
    provenance.push_back({{"schedule", p.schedule.values},
                          {"reversed", p.schedule.reversed},
                          {"values", p.values}});
  }
  out["provenance"] = std::move(provenance);
  return out;
}

namespace {

const json& field(const json& j, const char* key, json::value_t type) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("certificate: missing \"") + key + "\"", 0);
  }
  const json& v = j.at(key);
  const bool ok = type == json::value_t::number_unsigned
                      ? v.is_number_unsigned()
                      : v.type() == type;
  if (!ok) throw ParseError(std::string("certificate: \"") + key + "\" has the wrong type", 0);
  return v;
}

std::size_t unsigned_value(const json& v, const char* what) {
  if (!v.is_number_unsigned()) {
    throw ParseError(std::string("certificate: ") + what +
                         " must be a non-negative integer",
                     0);
  }
  return v.get<std::size_t>();
}

}  // namespace

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.vertex_count = unsigned_value(field(j, "n", json::value_t::number_unsigned), "n");
  c.edge_count = unsigned_value(field(j, "m", json::value_t::number_unsigned), "m");
  for (const json& o : field(j, "orientations", json::value_t::array)) {
    if (!o.is_array()) throw ParseError("certificate: orientation must be an array", 0);
    std::vector<bool> dirs;
    for (const json& d : o) {
      if (!d.is_boolean()) {
        throw ParseError("certificate: directions must be booleans", 0);
      }
      dirs.push_back(d.get<bool>());
    }
    c.orientations.emplace_back(std::move(dirs));
  }
  for (const json& w : field(j, "witness", json::value_t::array)) {
    c.witness.push_back(unsigned_value(w, "witness entries"));
  }
  if (j.contains("provenance")) {
    for (const json& p : field(j, "provenance", json::value_t::array)) {
      Provenance prov;
      const json& sched = field(p, "schedule", json::value_t::array);
      const json& rev = field(p, "reversed", json::value_t::array);
      if (sched.size() != kCoordinates || rev.size() != kCoordinates) {
        throw ParseError("certificate: schedule and reversed need 3 entries", 0);
      }
      for (std::size_t i = 0; i < kCoordinates; ++i) {
        if (!sched[i].is_number_integer() || !rev[i].is_boolean()) {
          throw ParseError("certificate: malformed schedule", 0);
        }
        prov.schedule.values[i] = sched[i].get<int>();
        prov.schedule.reversed[i] = rev[i].get<bool>();
      }
      prov.schedule.name = format_schedule(prov.schedule);
      for (const json& v : field(p, "values", json::value_t::array)) {
        if (!v.is_number_integer()) throw ParseError("certificate: malformed values", 0);
        prov.values.push_back(v.get<int>());
      }
      c.provenance.push_back(std::move(prov));
    }
  }
  return c;
}

Certificate parse_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("certificate: invalid JSON: ") + e.what(),
                     e.byte == 0 ? 0 : e.byte - 1);
  }
  return certificate_from_json(j);
}

json report_to_json(const Report& r) {
  json orientations = json::array();
  for (std::size_t i = 0; i < r.orientations.size(); ++i) {
    orientations.push_back({{"index", i},
                            {"well_formed", r.orientations[i].well_formed},
                            {"strongly_connected", r.orientations[i].strongly_connected}});
  }
  json failures = json::array();
  for (const auto& f : r.edge_failures) {
    json entry = {{"edge", f.edge}, {"reason", f.reason}};
    entry["orientation"] = f.orientation ? json(*f.orientation) : json(nullptr);
    failures.push_back(std::move(entry));
  }
  return {{"pass", r.pass},
          {"graph_matches", r.graph_matches},
          {"size_ok", r.size_ok},
          {"orientations", std::move(orientations)},
          {"edge_failures", std::move(failures)}};
}

json circuits_to_json(const Graph& g, const CircuitOrientation& co) {
  json out = json::array();
  for (const CoordinateOrientation& coord : co.coordinates) {
    json circuits = json::array();
    for (const Circuit& c : coord.circuits) circuits.push_back(circuit_vertices(g, c));
    out.push_back(std::move(circuits));
  }
  return out;
}

json frank_result_to_json(const FrankResult& r) {
  return {{"frank_number", r.frank_number},
          {"sc_orientations", r.strong_orientations},
          {"distinct_maximal_masks", r.distinct_masks}};
}

json cut_to_json(const Graph& g, const EdgeCut& cut) {
  json edges = json::array();
  for (EdgeId e : cut.edges) {
    edges.push_back({{"id", e}, {"u", g.edge(e).u}, {"v", g.edge(e).v}});
  }
  return {{"size", cut.size}, {"edges", std::move(edges)}};
}

}  // namespace frank
