#include "frank/superpose.hpp"

#include <charconv>
#include <cstdlib>

namespace frank {

std::vector<ValueSchedule> standard_schedules() {
  return {
      {{1, 2, 4}, {false, false, false}, "S1"},
      {{4, 2, 3}, {false, false, false}, "S2"},
      {{4, 2, 3}, {false, false, true}, "S3"},
      {{2, 1, 4}, {false, true, false}, "S4"},
      {{2, 4, 1}, {false, true, false}, "S5"},
  };
}

bool is_admissible(const ValueSchedule& s) {
  for (int v : s.values) {
    if (v <= 0) return false;
  }
  const auto& v = s.values;
  for (std::size_t i = 0; i < kCoordinates; ++i) {
    for (std::size_t j = i + 1; j < kCoordinates; ++j) {
      if (v[i] == v[j]) return false;  // v_i - v_j = 0
    }
  }
  for (int s1 : {-1, 1}) {
    for (int s2 : {-1, 1}) {
      if (v[0] + s1 * v[1] + s2 * v[2] == 0) return false;
    }
  }
  return true;
}

ValueSchedule parse_schedule(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> fields;
  for (std::size_t pos = 0;;) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    fields.emplace_back(text.substr(pos, end - pos), pos);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (fields.size() != kCoordinates && fields.size() != kCoordinates + 1) {
    throw ParseError("schedule: expected v1,v2,v3[,r1r2r3]", 0);
  }
  ValueSchedule s;
  for (std::size_t i = 0; i < kCoordinates; ++i) {
    const auto [tok, start] = fields[i];
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("schedule: invalid value '" + std::string(tok) + "'", start);
    }
    s.values[i] = value;
  }
  if (fields.size() > kCoordinates) {
    const auto [tok, start] = fields[kCoordinates];
    if (tok.size() != kCoordinates) {
      throw ParseError("schedule: reversal flags must be three 0/1 digits", start);
    }
    for (std::size_t i = 0; i < kCoordinates; ++i) {
      if (tok[i] != '0' && tok[i] != '1') {
        throw ParseError("schedule: reversal flag must be 0 or 1", start + i);
      }
      s.reversed[i] = tok[i] == '1';
    }
  }
  s.name = format_schedule(s);
  return s;
}

std::string format_schedule(const ValueSchedule& s) {
  std::string out;
  for (std::size_t i = 0; i < kCoordinates; ++i) {
    if (i) out += ',';
    out += std::to_string(s.values[i]);
  }
  out += ',';
  for (bool r : s.reversed) out += r ? '1' : '0';
  return out;
}

int superpose_edge(Z2Cube bits, const std::array<std::int8_t, kCoordinates>& sign,
                   const ValueSchedule& s) {
  int total = 0;
  for (std::size_t c = 0; c < kCoordinates; ++c) {
    if (!bits[c]) continue;
    const int dir = s.reversed[c] ? -sign[c] : sign[c];
    total += dir * s.values[c];
  }
  return total;
}

IntFlow superpose(const Graph& g, const CircuitOrientation& co,
                  const ValueSchedule& s) {
  if (!is_admissible(s)) {
    throw ScheduleError("schedule " + format_schedule(s) +
                        " is not admissible: some signed sum of its values is 0");
  }
  IntFlow flow{Orientation(g.edge_count()), std::vector<int>(g.edge_count(), 0)};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Z2Cube bits;
    std::array<std::int8_t, kCoordinates> sign{};
    for (std::size_t c = 0; c < kCoordinates; ++c) {
      sign[c] = co.coordinates[c].sign.at(e);
      bits.set(c, sign[c] != 0);
    }
    if (bits.is_zero()) {
      throw UncoveredEdgeError(
          "edge " + std::to_string(e) + " is in no coordinate subgraph", {e});
    }
    const int total = superpose_edge(bits, sign, s);
    if (total == 0) {
      throw InvariantError("admissible schedule produced a zero value");
    }
    flow.orientation.set_forward(e, total > 0);
    flow.value[e] = std::abs(total);
  }
  return flow;
}

bool verify_int_flow(const Graph& g, const IntFlow& f) {
  if (f.value.size() != g.edge_count() || f.orientation.size() != g.edge_count()) {
    return false;
  }
  std::vector<long long> excess(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (f.value[e] <= 0) return false;
    const Arc a = f.orientation.arc(g, e);
    excess[a.tail] -= f.value[e];
    excess[a.head] += f.value[e];
  }
  for (long long x : excess) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<EdgeId> value_one_edges(const IntFlow& f) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < f.value.size(); ++e) {
    if (f.value[e] == 1) out.push_back(e);
  }
  return out;
}

DirectionAgreement direction_agreement(const CircuitOrientation& co, EdgeId e) {
  const std::int8_t s0 = co.coordinates[0].sign.at(e);
  const std::int8_t s1 = co.coordinates[1].sign.at(e);
  const std::int8_t s2 = co.coordinates[2].sign.at(e);
  DirectionAgreement a;
  if (s0 && s1) a.same01 = s0 == s1;
  if (s0 && s2) a.same02 = s0 == s2;
  if (s1 && s2) a.same12 = s1 == s2;
  return a;
}

Table1Outcome classify_edge_table1(Z2Cube bits, const DirectionAgreement& a) {
  const bool has01 = bits[0] && bits[1];
  const bool has02 = bits[0] && bits[2];
  const bool has12 = bits[1] && bits[2];
  if (a.same01.has_value() != has01 || a.same02.has_value() != has02 ||
      a.same12.has_value() != has12) {
    throw Error("direction agreement does not match the coordinates present");
  }
  switch (bits.mask()) {
    case 0b001: return {1, 0, 1};
    case 0b010: return {2, 1, 2};
    case 0b100: return {3, 2, 4};
    case 0b011: return *a.same01 ? Table1Outcome{4, 1, 3} : Table1Outcome{5, 1, 1};
    case 0b101: return *a.same02 ? Table1Outcome{6, 2, 5} : Table1Outcome{7, 2, 3};
    case 0b110: return *a.same12 ? Table1Outcome{8, 2, 6} : Table1Outcome{9, 2, 2};
    case 0b111: {
      const bool s01 = *a.same01;
      const bool s02 = *a.same02;
      const bool s12 = *a.same12;
      if (s01 && s02 && s12) return {10, 2, 7};
      if (!s01 && !s02 && s12) return {11, 2, 5};  // o_1 is the odd one out
      if (!s01 && s02 && !s12) return {12, 2, 3};  // o_2
      if (s01 && !s02 && !s12) return {13, 2, 1};  // o_3
      throw Error("direction agreement is not realizable by two directions");
    }
    default:
      throw Error("an edge value of (0,0,0) has no table row");
  }
}

}  // namespace frank
