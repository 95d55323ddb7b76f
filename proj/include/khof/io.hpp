#pragma once

// JSON wire formats for diagrams and invariant tables.
//
// Diagram: {"crossings":[{"oi","oo","ui","uo","sign"}...],
//           "components":[[arc ids]...], "free_loops":n,
//           "basepoints":{"<component>":arc}}
// Component indices are 0-based. A free loop is listed in "components" as a
// single arc that no crossing uses; loops counted by "free_loops" but not
// listed are appended with fresh arc ids.

#include <string>

#include <json.hpp>

#include "khof/detection.hpp"
#include "khof/diagram.hpp"
#include "khof/khovanov.hpp"

namespace khof {

using nlohmann::json;

json diagram_to_json(const OrientedPDDiagram& d);
/// Structural parse only; call validate() for the diagram invariants.
OrientedPDDiagram diagram_from_json(const json& j);
OrientedPDDiagram read_diagram_file(const std::string& path);

/// {"coeff":"F2"|"Z","free":[[h,q,rank]...],"torsion":[[h,q,order]...]}
json ranks_to_json(const BigradedRanks& b);
BigradedRanks ranks_from_json(const json& j);
/// One line per summand: kind,h,q,value with kind free or torsion.
std::string ranks_to_csv(const BigradedRanks& b);

json internal_to_json(const InternalGradingRanks& r);
json classification_to_json(const Classification& c);

}  // namespace khof
