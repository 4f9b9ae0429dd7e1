#pragma once

// JSON instance/profile/report serialization and CSV emission.
//
// Instance schema:
//   {"kind": "general"|"metric"|"one_two"|"tree"|"points", "n": int,
//    "weights": [[num | "p/q" | "d.dd" | {"num":int,"den":int} | "inf"]],
//    "tree": {"edges": [[u, v, w]]},
//    "points": {"p": num, "coords": [[num]]},
//    "profile": [[targets of agent 0], ...]}           (profile optional)
// Plain JSON numbers must be integers; non-integer values are written as
// decimal strings or {"num","den"} pairs so nothing is parsed inexactly.

#include <string>
#include <vector>

#include <json.hpp>

#include "netgame/dynamics.hpp"
#include "netgame/equilibria.hpp"
#include "netgame/families.hpp"
#include "netgame/optima.hpp"

namespace netgame {

using nlohmann::json;

json num_to_json(const Num& value);
Num num_from_json(const json& j);

json host_to_json(const HostGraph& host);
HostGraph host_from_json(const json& j);

json profile_to_json(const StrategyProfile& profile);
StrategyProfile profile_from_json(const json& j, int n);

json move_to_json(const Move& move);
json report_to_json(const EquilibriumReport& report);
json cost_breakdown_to_json(const CostBreakdown& cost);
json edge_set_to_json(const EdgeSet& edge_set);
json trace_to_json(const DynamicsTrace& trace);
json cycle_to_json(const CycleCertificate& cert);
CycleCertificate cycle_from_json(const json& j, int n);
json bundle_to_json(const InstanceBundle& bundle);

// RFC-4180-style CSV: CRLF line endings, quoted fields where needed,
// header first. Rationals render as "p/q", doubles with 12 significant
// digits.
std::string emit_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

}  // namespace netgame
