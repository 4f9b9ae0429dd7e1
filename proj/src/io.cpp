#include "netgame/io.hpp"

#include <cmath>

namespace netgame {

json num_to_json(const Num& value) {
  switch (value.kind()) {
    case Num::Kind::Rational:
      if (value.denominator() == 1) return json(value.numerator());
      return json{{"num", value.numerator()}, {"den", value.denominator()}};
    case Num::Kind::Real: return json(value.to_double());
    case Num::Kind::Infinite: return json("inf");
  }
  return json();
}

Num num_from_json(const json& j) {
  if (j.is_number_integer()) return Num(j.get<long long>());
  if (j.is_number_float()) {
    double v = j.get<double>();
    if (v == std::floor(v) && std::fabs(v) < 9e15) return Num(static_cast<long long>(v));
    throw InputError("non-integer number literal " + j.dump() +
                     "; use a decimal string or {\"num\",\"den\"}");
  }
  if (j.is_string()) return Num::parse(j.get<std::string>());
  if (j.is_object() && j.contains("num") && j.contains("den"))
    return Num::ratio(j.at("num").get<long long>(), j.at("den").get<long long>());
  throw InputError("cannot parse number from " + j.dump());
}

json host_to_json(const HostGraph& host) {
  json j;
  j["kind"] = host_kind_name(host.kind());
  j["n"] = host.size();
  if (host.kind() == HostKind::Tree) {
    json edges = json::array();
    for (const TreeEdge& e : *host.defining_tree())
      edges.push_back(json::array({e.u, e.v, num_to_json(e.w)}));
    j["tree"] = {{"edges", edges}};
  } else if (host.kind() == HostKind::Points) {
    const PointSet& ps = *host.point_set();
    json coords = json::array();
    for (const auto& point : ps.coords) {
      json row = json::array();
      for (const Num& c : point) row.push_back(num_to_json(c));
      coords.push_back(row);
    }
    j["points"] = {{"p", num_to_json(ps.p)}, {"coords", coords}};
  } else {
    json rows = json::array();
    for (int u = 0; u < host.size(); ++u) {
      json row = json::array();
      for (int v = 0; v < host.size(); ++v) row.push_back(num_to_json(host.weight(u, v)));
      rows.push_back(row);
    }
    j["weights"] = rows;
  }
  return j;
}

HostGraph host_from_json(const json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  const std::string kind = j.value("kind", "general");
  if (kind == "tree") {
    if (!j.contains("tree") || !j.at("tree").contains("edges"))
      throw InputError("tree instance needs tree.edges");
    std::vector<TreeEdge> edges;
    for (const json& e : j.at("tree").at("edges")) {
      if (!e.is_array() || e.size() != 3) throw InputError("tree edge must be [u, v, w]");
      edges.push_back({e[0].get<int>(), e[1].get<int>(), num_from_json(e[2])});
    }
    int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(edges.size()) + 1;
    return HostGraph::from_tree(n, edges);
  }
  if (kind == "points") {
    if (!j.contains("points")) throw InputError("points instance needs a points block");
    const json& pts = j.at("points");
    Num p = pts.contains("p") ? num_from_json(pts.at("p")) : Num(2);
    std::vector<std::vector<Num>> coords;
    for (const json& row : pts.at("coords")) {
      std::vector<Num> point;
      for (const json& c : row) point.push_back(num_from_json(c));
      coords.push_back(std::move(point));
    }
    return HostGraph::from_points(coords, p);
  }
  if (!j.contains("n") || !j.contains("weights"))
    throw InputError("instance needs n and a weights matrix");
  const int n = j.at("n").get<int>();
  const json& rows = j.at("weights");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw InputError("weights must be an " + std::to_string(n) + "x" + std::to_string(n) +
                     " matrix");
  std::vector<Num> w;
  w.reserve(static_cast<size_t>(n) * n);
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InputError("weights must be an " + std::to_string(n) + "x" + std::to_string(n) +
                       " matrix");
    for (const json& cell : row) w.push_back(num_from_json(cell));
  }
  if (kind == "one_two") return HostGraph::one_two(n, std::move(w));
  if (kind == "metric") return HostGraph::metric(n, std::move(w));
  if (kind == "general") return HostGraph::general(n, std::move(w));
  throw InputError("unknown host kind \"" + kind + "\"");
}

json profile_to_json(const StrategyProfile& profile) {
  json out = json::array();
  for (const auto& targets : profile.targets()) out.push_back(targets);
  return out;
}

StrategyProfile profile_from_json(const json& j, int n) {
  if (!j.is_array()) throw InputError("profile must be an array of target lists");
  std::vector<std::vector<int>> targets;
  for (const json& row : j) {
    if (!row.is_array()) throw InputError("profile entries must be arrays");
    targets.push_back(row.get<std::vector<int>>());
  }
  return StrategyProfile::from_targets(n, targets);
}

namespace {

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Add: return "add";
    case MoveKind::Delete: return "delete";
    case MoveKind::Swap: return "swap";
    case MoveKind::FullStrategy: return "full-strategy";
  }
  return "add";
}

}  // namespace

json move_to_json(const Move& move) {
  json j;
  j["agent"] = move.agent;
  j["kind"] = move_kind_name(move.kind);
  switch (move.kind) {
    case MoveKind::Add:
    case MoveKind::Delete: j["target"] = move.target; break;
    case MoveKind::Swap:
      j["swap_out"] = move.swap_out;
      j["swap_in"] = move.swap_in;
      break;
    case MoveKind::FullStrategy: j["new_strategy"] = move.new_strategy; break;
  }
  j["cost_before"] = num_to_json(move.cost_before);
  j["cost_after"] = num_to_json(move.cost_after);
  j["delta"] = num_to_json(move.delta);
  return j;
}

json report_to_json(const EquilibriumReport& report) {
  auto verdict = [](const LevelVerdict& v) {
    json j;
    j["stable"] = v.stable;
    if (v.witness) j["witness"] = move_to_json(*v.witness);
    return j;
  };
  json j;
  j["ae"] = verdict(report.ae);
  if (report.ge) j["ge"] = verdict(*report.ge);
  if (report.ne) j["ne"] = verdict(*report.ne);
  if (report.beta_ge) j["beta_ge"] = num_to_json(*report.beta_ge);
  if (report.beta_ne) j["beta_ne"] = num_to_json(*report.beta_ne);
  j["ne_certified_exactly"] = report.ne_certified_exactly;
  j["epsilon"] = report.epsilon_used;
  return j;
}

json cost_breakdown_to_json(const CostBreakdown& cost) {
  return json{{"edge_cost", num_to_json(cost.edge_cost)},
              {"distance_cost", num_to_json(cost.distance_cost)},
              {"total", num_to_json(cost.total)}};
}

json edge_set_to_json(const EdgeSet& edge_set) {
  json edges = json::array();
  for (auto [u, v] : edge_set.edges) edges.push_back(json::array({u, v}));
  return json{{"edges", edges},
              {"total_weight", num_to_json(edge_set.total_weight)},
              {"social_cost", num_to_json(edge_set.social_cost)},
              {"alpha", num_to_json(edge_set.alpha)}};
}

json cycle_to_json(const CycleCertificate& cert) {
  json steps = json::array();
  for (const CycleStep& s : cert.steps)
    steps.push_back(json{{"profile", profile_to_json(s.before)},
                         {"mover", s.mover},
                         {"new_strategy", s.new_strategy}});
  return json{{"steps", steps}};
}

CycleCertificate cycle_from_json(const json& j, int n) {
  CycleCertificate cert;
  if (!j.is_object() || !j.contains("steps")) throw InputError("cycle certificate needs steps");
  for (const json& s : j.at("steps")) {
    CycleStep step;
    step.before = profile_from_json(s.at("profile"), n);
    step.mover = s.at("mover").get<int>();
    step.new_strategy = s.at("new_strategy").get<std::vector<int>>();
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

json trace_to_json(const DynamicsTrace& trace) {
  json j;
  j["initial"] = profile_to_json(trace.initial);
  j["rule"] = move_rule_name(trace.config.rule);
  j["scheduler"] = scheduler_name(trace.config.scheduler);
  j["seed"] = trace.config.seed;
  j["max_steps"] = trace.config.max_steps;
  json steps = json::array();
  for (const TraceStep& s : trace.steps)
    steps.push_back(json{{"agent", s.agent},
                         {"move", move_to_json(s.move)},
                         {"profile", profile_to_json(s.after)}});
  j["steps"] = steps;
  j["outcome"] = outcome_name(trace.outcome);
  if (trace.final_profile) j["final"] = profile_to_json(*trace.final_profile);
  if (trace.cycle) j["cycle"] = cycle_to_json(*trace.cycle);
  return j;
}

json bundle_to_json(const InstanceBundle& bundle) {
  json j;
  j["instance"] = host_to_json(bundle.host);
  json profiles;
  for (const auto& [name, profile] : bundle.profiles) profiles[name] = profile_to_json(profile);
  j["profiles"] = profiles;
  json predictions;
  json formulas;
  for (const Prediction& p : bundle.predictions) {
    predictions[p.name] = num_to_json(p.value);
    formulas[p.name] = p.formula;
  }
  j["predictions"] = predictions;
  j["formulas"] = formulas;
  if (bundle.designated_agent) j["designated_agent"] = *bundle.designated_agent;
  return j;
}

std::string emit_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  };
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += field(cells[i]);
    }
    out += "\r\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

}  // namespace netgame
