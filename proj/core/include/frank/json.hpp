#pragma once

#include <nlohmann/json.hpp>

#include "frank/certificate.hpp"
#include "frank/circuits.hpp"
#include "frank/connectivity.hpp"
#include "frank/group_flow.hpp"
#include "frank/oracle.hpp"

namespace frank {

/// {"edges":[{"id":0,"u":0,"v":1,"bits":[1,0,1]}, ...]}
nlohmann::json group_flow_to_json(const Graph& g, const GroupFlow& f);

/// {"n":..,"m":..,"orientations":[[bool,..],..],"witness":[int,..],
///  "provenance":[{"schedule":[v1,v2,v3],"reversed":[b,b,b],"values":[..]},..]}
nlohmann::json certificate_to_json(const Certificate& c);

/// Inverse of certificate_to_json; "provenance" is optional. Unknown keys are
/// ignored. Throws ParseError on a schema violation.
Certificate certificate_from_json(const nlohmann::json& j);
Certificate parse_certificate(std::string_view text);

nlohmann::json report_to_json(const Report& r);

/// Per coordinate, each circuit as its vertex sequence.
nlohmann::json circuits_to_json(const Graph& g, const CircuitOrientation& co);

nlohmann::json frank_result_to_json(const FrankResult& r);

nlohmann::json cut_to_json(const Graph& g, const EdgeCut& cut);

}  // namespace frank
