// Command-line front end: instance I/O, cost evaluation, best responses,
// equilibrium certification, optima, dynamics, family generators and PoA
// sweeps. Exit codes: 0 ok, 1 property/certification failure, 2 input
// error, 3 cap exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "netgame/io.hpp"

using namespace netgame;

namespace {

struct GlobalOptions {
  std::string input = "-";
  std::string output = "-";
  std::string format = "json";
  std::string alpha = "1";
  double epsilon = 1e-9;
  int cap = 20;
  int opt_cap = 7;
  bool json_errors = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const GlobalOptions& opts, const std::string& text) {
  std::string path = opts.output;
  if (path != "-") {
    if (const char* dir = std::getenv("NETGAME_OUTPUT_DIR");
        dir && *dir && path.front() != '/') {
      path = std::string(dir) + "/" + path;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file " + path);
    out << text;
    return;
  }
  std::cout << text;
}

json parse_instance_json(const GlobalOptions& opts) {
  std::string text = read_input(opts.input);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
}

HostGraph load_host(const json& j, const GlobalOptions& opts) {
  HostGraph host = host_from_json(j);
  host.set_epsilon(opts.epsilon);
  return host;
}

StrategyProfile load_profile(const json& j, const HostGraph& host) {
  if (!j.contains("profile")) throw InputError("instance has no profile");
  return profile_from_json(j.at("profile"), host.size());
}

Num parse_alpha(const GlobalOptions& opts) {
  Num a = Num::parse(opts.alpha);
  if (a.is_infinite() || a <= Num(0)) throw InputError("alpha must be positive and finite");
  if (opts.cap < 2 || opts.opt_cap < 2) throw InputError("caps must be at least 2");
  if (opts.epsilon <= 0.0) throw InputError("epsilon must be positive");
  if (opts.format != "json" && opts.format != "csv")
    throw InputError("format must be json or csv");
  return a;
}

std::vector<Num> parse_num_list(const std::string& text) {
  std::vector<Num> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Num::parse(item));
  return out;
}

std::vector<int> parse_int_list(const std::string& text, char sep = ',') {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

std::vector<std::vector<int>> parse_sets(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';'))
    if (!group.empty()) out.push_back(parse_int_list(group));
  return out;
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-');
    if (dash == std::string::npos) throw InputError("edge list entries look like u-v");
    out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return out;
}

std::vector<Num> alpha_grid(const Num& from, const Num& to, const Num& step) {
  if (step <= Num(0)) throw InputError("alpha grid step must be positive");
  std::vector<Num> grid;
  for (Num a = from; a <= to; a += step) {
    if (a > Num(0)) grid.push_back(a);
    if (grid.size() > 10000) throw InputError("alpha grid too fine");
  }
  return grid;
}

struct FamilyRequest {
  std::string name;
  int n = 5;
  int d = 2;
  int clique = 2;          // N of the one-two family
  int universe = 2;
  std::string sets = "0,1;1";
  std::string L = "100";
  std::string eps_len = "1/100";
  std::string beta = "1";
  int vc_vertices = 2;
  std::string vc_edges = "0-1";
  std::string cover = "0";
};

InstanceBundle build_family(const FamilyRequest& req, const Num& alpha) {
  if (req.name == "tree-star") return tree_star_family(req.n, alpha);
  if (req.name == "geometric-path") return geometric_path_family(req.n, alpha);
  if (req.name == "four-node") return four_node_family(alpha);
  if (req.name == "rd-one-norm") return rd_one_norm_family(req.d, alpha);
  if (req.name == "one-two-lb") return one_two_lb_family(req.clique, alpha);
  if (req.name == "general-triangle") return general_triangle(alpha);
  if (req.name == "set-cover-tree")
    return set_cover_tree_instance(req.universe, parse_sets(req.sets), Num::parse(req.L),
                                   Num::parse(req.eps_len), Num::parse(req.beta));
  if (req.name == "set-cover-points")
    return set_cover_points_instance(req.universe, parse_sets(req.sets), Num::parse(req.L),
                                     Num::parse(req.eps_len), Num::parse(req.beta));
  if (req.name == "vertex-cover")
    return vertex_cover_instance(req.vc_vertices, parse_edge_list(req.vc_edges),
                                 parse_int_list(req.cover));
  if (req.name == "brc-points") return InstanceBundle{brc_points()};
  throw InputError("unknown family \"" + req.name + "\"");
}

int run_validate(const GlobalOptions& opts, bool classify) {
  json j = parse_instance_json(opts);
  HostGraph host = load_host(j, opts);
  json out;
  out["kind"] = host_kind_name(host.kind());
  out["n"] = host.size();
  out["float_mode"] = host.float_mode();
  auto violations = host.check_metric();
  out["metric"] = violations.empty();
  json vio = json::array();
  for (const auto& v : violations)
    vio.push_back(json{{"u", v.u}, {"x", v.x}, {"v", v.v}, {"slack", num_to_json(v.slack)}});
  out["violations"] = vio;
  if (classify && host.kind() == HostKind::General && violations.empty())
    out["classified_kind"] = "metric";
  if (j.contains("profile")) {
    StrategyProfile profile = load_profile(j, host);
    Network network(host, profile);
    int both = 0;
    for (const EdgeInfo& e : network.edges())
      if (e.owned_by_u && e.owned_by_v) ++both;
    out["profile"] = json{{"edges", network.edges().size()},
                          {"both_owner_edges", both},
                          {"connected", network.connected()}};
  }
  write_output(opts, out.dump(2) + "\n");
  return 0;
}

int run_cost(const GlobalOptions& opts) {
  json j = parse_instance_json(opts);
  HostGraph host = load_host(j, opts);
  StrategyProfile profile = load_profile(j, host);
  Num alpha = parse_alpha(opts);
  if (opts.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (int u = 0; u < host.size(); ++u) {
      CostBreakdown c = agent_cost(host, profile, u, alpha);
      rows.push_back({std::to_string(u), c.edge_cost.str(), c.distance_cost.str(), c.total.str()});
    }
    rows.push_back({"social", "", "", social_cost(host, profile, alpha).str()});
    write_output(opts, emit_csv({"agent", "edge_cost", "distance_cost", "total"}, rows));
    return 0;
  }
  json out;
  json agents = json::array();
  for (int u = 0; u < host.size(); ++u)
    agents.push_back(cost_breakdown_to_json(agent_cost(host, profile, u, alpha)));
  out["agents"] = agents;
  out["social_cost"] = num_to_json(social_cost(host, profile, alpha));
  out["alpha"] = num_to_json(alpha);
  Network network(host, profile);
  if (network.connected()) out["stretch"] = num_to_json(stretch(host, network));
  write_output(opts, out.dump(2) + "\n");
  return 0;
}

int run_best_response(const GlobalOptions& opts, int agent, const std::string& rule) {
  json j = parse_instance_json(opts);
  HostGraph host = load_host(j, opts);
  StrategyProfile profile = load_profile(j, host);
  Num alpha = parse_alpha(opts);
  json out;
  out["agent"] = agent;
  out["rule"] = rule;
  if (rule == "exact") {
    BestResponse br = best_response_exact(host, profile, agent, alpha, opts.cap);
    out["strategy"] = br.strategy;
    out["cost"] = num_to_json(br.cost);
  } else if (rule == "greedy") {
    std::vector<int> strategy = greedy_stable_response(host, profile, agent, alpha);
    StrategyProfile stable = profile;
    std::uint64_t mask = 0;
    for (int v : strategy) mask |= std::uint64_t{1} << v;
    stable.set_mask(agent, mask);
    out["strategy"] = strategy;
    out["cost"] = num_to_json(agent_cost(host, stable, agent, alpha).total);
  } else {
    throw InputError("rule must be exact or greedy");
  }
  write_output(opts, out.dump(2) + "\n");
  return 0;
}

int run_certify(const GlobalOptions& opts, const std::string& level_name) {
  json j = parse_instance_json(opts);
  HostGraph host = load_host(j, opts);
  StrategyProfile profile = load_profile(j, host);
  Num alpha = parse_alpha(opts);
  Level level = level_name == "AE" ? Level::AE : level_name == "GE" ? Level::GE : Level::NE;
  if (level_name != "AE" && level_name != "GE" && level_name != "NE")
    throw InputError("level must be AE, GE or NE");
  EquilibriumReport report = certify(host, profile, alpha, level, opts.cap);
  write_output(opts, report_to_json(report).dump(2) + "\n");
  bool stable = level == Level::AE   ? report.ae.stable
                : level == Level::GE ? report.ge->stable
                                     : report.ne->stable;
  return stable ? 0 : 1;
}

int run_optimum(const GlobalOptions& opts, const std::string& method, const std::string& stretch_k,
                bool assign_ownership) {
  json j = parse_instance_json(opts);
  HostGraph host = load_host(j, opts);
  Num alpha = parse_alpha(opts);
  EdgeSet result = [&] {
    if (method == "exact") return optimum_exact(host, alpha, opts.opt_cap);
    if (method == "one-two") return optimum_one_two(host, alpha);
    if (method == "tree") return optimum_tree(host, alpha);
    if (method == "spanner") return min_weight_spanner(host, Num::parse(stretch_k), alpha, opts.opt_cap);
    throw InputError("method must be exact, one-two, tree or spanner");
  }();
  json out = edge_set_to_json(result);
  int exit_code = 0;
  if (assign_ownership) {
    std::optional<StrategyProfile> owned = spanner_ne_ownership(host, result, alpha);
    if (owned) {
      out["ownership"] = profile_to_json(*owned);
      out["ownership_certified"] = true;
    } else {
      out["ownership_certified"] = false;
      exit_code = 1;  // contradicts the existence guarantee; report loudly
    }
  }
  write_output(opts, out.dump(2) + "\n");
  return exit_code;
}

int run_dynamics(const GlobalOptions& opts, const std::string& rule_name,
                 const std::string& scheduler_name_, std::uint64_t seed, int max_steps,
                 bool do_cycle_search, const std::string& grid_spec, int max_len, int restarts,
                 const std::string& verify_cert_path) {
  json j = parse_instance_json(opts);
  HostGraph host = load_host(j, opts);
  Num alpha = parse_alpha(opts);
  MoveRule rule = rule_name == "greedy-single" ? MoveRule::GreedySingle : MoveRule::ExactBestResponse;
  if (rule_name != "greedy-single" && rule_name != "exact-br")
    throw InputError("rule must be exact-br or greedy-single");

  if (!verify_cert_path.empty()) {
    std::ifstream in(verify_cert_path);
    if (!in) throw InputError("cannot open certificate file " + verify_cert_path);
    json cj;
    try {
      in >> cj;
    } catch (const json::parse_error& e) {
      throw InputError(std::string("certificate JSON parse error: ") + e.what());
    }
    CycleCertificate cert = cycle_from_json(cj, host.size());
    CycleVerdict verdict = verify_cycle(host, alpha, cert, rule, opts.cap);
    json out;
    out["accepted"] = verdict.accepted;
    if (!verdict.accepted) {
      out["failing_step"] = verdict.failing_step;
      out["reason"] = verdict.reason;
    }
    write_output(opts, out.dump(2) + "\n");
    return verdict.accepted ? 0 : 1;
  }

  if (do_cycle_search) {
    std::vector<Num> grid;
    if (!grid_spec.empty()) {
      std::vector<Num> parts = parse_num_list(grid_spec);
      if (parts.size() != 3) throw InputError("alpha grid looks like from,to,step");
      grid = alpha_grid(parts[0], parts[1], parts[2]);
    } else {
      grid = {alpha};
    }
    std::vector<FoundCycle> cycles = cycle_search(host, grid, max_len, restarts, seed, rule);
    json out;
    out["searched_alphas"] = grid.size();
    json found = json::array();
    for (const FoundCycle& fc : cycles)
      found.push_back(json{{"alpha", num_to_json(fc.alpha)}, {"cycle", cycle_to_json(fc.certificate)}});
    out["cycles"] = found;
    write_output(opts, out.dump(2) + "\n");
    return 0;
  }

  StrategyProfile init =
      j.contains("profile") ? load_profile(j, host) : StrategyProfile(host.size());
  DynamicsConfig config;
  config.rule = rule;
  config.scheduler =
      scheduler_name_ == "random" ? SchedulerKind::Random : SchedulerKind::RoundRobin;
  if (scheduler_name_ != "random" && scheduler_name_ != "round-robin")
    throw InputError("scheduler must be round-robin or random");
  config.seed = seed;
  config.max_steps = max_steps;
  config.br_cap = opts.cap;
  DynamicsTrace trace = run(host, alpha, init, config);
  write_output(opts, trace_to_json(trace).dump(2) + "\n");
  return 0;
}

int run_family(const GlobalOptions& opts, const FamilyRequest& req) {
  Num alpha = parse_alpha(opts);
  InstanceBundle bundle = build_family(req, alpha);
  json out = bundle_to_json(bundle);
  out["family"] = req.name;
  out["alpha"] = num_to_json(alpha);
  write_output(opts, out.dump(2) + "\n");
  return 0;
}

Num poa_bound(const std::string& family, const Num& alpha) {
  if (family == "general-triangle") {
    Num h = (alpha + Num(2)) / Num(2);
    return h * h;
  }
  if (family == "one-two-lb")
    return alpha == Num(1) ? Num::ratio(3, 2) : Num(3) / (alpha + Num(2));
  return (alpha + Num(2)) / Num(2);
}

int run_poa(const GlobalOptions& opts, const std::string& family, const std::string& n_list,
            const std::string& d_list, const std::string& clique_list,
            const std::string& alpha_list, bool exact_opt) {
  std::vector<Num> alphas =
      alpha_list.empty() ? std::vector<Num>{parse_alpha(opts)} : parse_num_list(alpha_list);
  std::vector<int> params;
  std::string param_key = "-";
  if (family == "tree-star" || family == "geometric-path") {
    params = n_list.empty() ? std::vector<int>{5} : parse_int_list(n_list);
    param_key = "n";
  } else if (family == "rd-one-norm") {
    params = d_list.empty() ? std::vector<int>{2} : parse_int_list(d_list);
    param_key = "d";
  } else if (family == "one-two-lb") {
    params = clique_list.empty() ? std::vector<int>{2} : parse_int_list(clique_list);
    param_key = "N";
  } else if (family == "four-node" || family == "general-triangle") {
    params = {0};
  } else {
    throw InputError("poa sweeps support tree-star, geometric-path, four-node, rd-one-norm, "
                     "one-two-lb and general-triangle");
  }

  std::vector<std::vector<std::string>> rows;
  json json_rows = json::array();
  for (int p : params)
    for (const Num& alpha : alphas) {
      FamilyRequest req;
      req.name = family;
      req.n = p;
      req.d = p;
      req.clique = p;
      InstanceBundle bundle = build_family(req, alpha);
      Num cost_ne = bundle.prediction("cost_NE");
      std::string opt_method = "closed-form";
      Num cost_opt;
      if (exact_opt && bundle.host.size() <= opts.opt_cap) {
        cost_opt = optimum_exact(bundle.host, alpha, opts.opt_cap).social_cost;
        opt_method = "exact";
      } else if (family == "one-two-lb" && alpha != Num(1)) {
        cost_opt = bundle.prediction("cost_OPT_upper");
        opt_method = "bound";
      } else {
        cost_opt = bundle.prediction("cost_OPT");
      }
      Num ratio = cost_ne / cost_opt;
      Num bound = poa_bound(family, alpha);
      bool ok = ratio <= bound;
      std::string param = param_key == "-" ? "-" : param_key + "=" + std::to_string(p);
      rows.push_back({family, param, alpha.str(), cost_ne.str(), cost_opt.str(), ratio.str(),
                      bound.str(), ok ? "true" : "false", opt_method});
      json_rows.push_back(json{{"family", family},
                               {"params", param},
                               {"alpha", num_to_json(alpha)},
                               {"cost_NE", num_to_json(cost_ne)},
                               {"cost_OPT", num_to_json(cost_opt)},
                               {"ratio", num_to_json(ratio)},
                               {"bound", num_to_json(bound)},
                               {"bound_satisfied", ok},
                               {"opt_method", opt_method}});
    }
  if (opts.format == "csv")
    write_output(opts, emit_csv({"family", "params", "alpha", "cost_NE", "cost_OPT", "ratio",
                                 "bound", "bound_satisfied", "opt_method"},
                                rows));
  else
    write_output(opts, json_rows.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"network creation game toolkit: costs, equilibria, optima, dynamics"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  GlobalOptions opts;
  app.add_option("-i,--input", opts.input, "instance JSON file ('-' for stdin)");
  app.add_option("-o,--output", opts.output, "output file ('-' for stdout)");
  app.add_option("-f,--format", opts.format, "output format: json or csv");
  app.add_option("-a,--alpha", opts.alpha, "edge price factor (integer, p/q or decimal)");
  app.add_option("--epsilon", opts.epsilon, "comparison tolerance in float mode");
  app.add_option("--cap", opts.cap, "max n for exhaustive best response");
  app.add_option("--opt-cap", opts.opt_cap, "max n for exhaustive optimum/spanner search");
  app.add_flag("--json-errors", opts.json_errors, "report errors as JSON on stdout");

  auto* validate_cmd = app.add_subcommand("validate", "validate an instance (and profile)");
  bool classify = false;
  validate_cmd->add_flag("--classify", classify, "re-tag a general host as metric if it checks out");

  auto* cost_cmd = app.add_subcommand("cost", "per-agent and social cost of a profile");

  auto* br_cmd = app.add_subcommand("best-response", "best response of one agent");
  int br_agent = 0;
  std::string br_rule = "exact";
  br_cmd->add_option("--agent", br_agent, "agent index")->required();
  br_cmd->add_option("--rule", br_rule, "exact or greedy");

  auto* certify_cmd = app.add_subcommand("certify", "certify AE/GE/NE stability");
  std::string level = "NE";
  certify_cmd->add_option("--level", level, "AE, GE or NE");

  auto* optimum_cmd = app.add_subcommand("optimum", "social optimum / minimum-weight spanner");
  std::string method = "exact";
  std::string stretch_k = "3/2";
  bool assign_ownership = false;
  optimum_cmd->add_option("--method", method, "exact, one-two, tree or spanner");
  optimum_cmd->add_option("--stretch", stretch_k, "stretch bound for --method spanner");
  optimum_cmd->add_flag("--assign-ownership", assign_ownership,
                        "search edge orientations for a Nash equilibrium");

  auto* dynamics_cmd = app.add_subcommand("dynamics", "improving-move dynamics / cycle search");
  std::string dyn_rule = "exact-br";
  std::string dyn_scheduler = "round-robin";
  std::uint64_t seed = 0;
  int max_steps = 1000;
  bool do_cycle_search = false;
  std::string grid_spec;
  int max_len = 8;
  int restarts = 20;
  dynamics_cmd->add_option("--rule", dyn_rule, "exact-br or greedy-single");
  dynamics_cmd->add_option("--scheduler", dyn_scheduler, "round-robin or random");
  dynamics_cmd->add_option("--seed", seed, "scheduler seed");
  dynamics_cmd->add_option("--max-steps", max_steps, "step budget");
  dynamics_cmd->add_flag("--cycle-search", do_cycle_search, "search for improving-move cycles");
  dynamics_cmd->add_option("--alpha-grid", grid_spec, "from,to,step for --cycle-search");
  dynamics_cmd->add_option("--max-len", max_len, "steps per restart in --cycle-search");
  dynamics_cmd->add_option("--restarts", restarts, "random restarts per alpha");
  std::string verify_cert_path;
  dynamics_cmd->add_option("--verify-cert", verify_cert_path,
                           "verify a cycle certificate JSON against the instance");

  auto* family_cmd = app.add_subcommand("family", "emit a generated instance bundle");
  FamilyRequest req;
  family_cmd->add_option("--family", req.name, "family name")->required();
  family_cmd->add_option("-n,--nodes", req.n, "node parameter (tree-star, geometric-path)");
  family_cmd->add_option("-d,--dim", req.d, "dimension (rd-one-norm)");
  family_cmd->add_option("-N,--clique", req.clique, "clique size (one-two-lb)");
  family_cmd->add_option("--universe", req.universe, "universe size (set-cover families)");
  family_cmd->add_option("--sets", req.sets, "sets, e.g. \"0,1;1\"");
  family_cmd->add_option("--L", req.L, "scale length L");
  family_cmd->add_option("--eps-len", req.eps_len, "construction epsilon");
  family_cmd->add_option("--beta", req.beta, "construction beta");
  family_cmd->add_option("--vc-vertices", req.vc_vertices, "vertex count (vertex-cover)");
  family_cmd->add_option("--vc-edges", req.vc_edges, "edges, e.g. \"0-1,1-2\"");
  family_cmd->add_option("--cover", req.cover, "claimed vertex cover, e.g. \"0,1\"");

  auto* poa_cmd = app.add_subcommand("poa", "sweep a family and report cost ratios");
  std::string poa_family = "tree-star";
  std::string n_list, d_list, clique_list, alpha_list;
  bool exact_opt = false;
  poa_cmd->add_option("--family", poa_family, "family to sweep")->required();
  poa_cmd->add_option("--n-list", n_list, "node counts, e.g. 4,5,8");
  poa_cmd->add_option("--d-list", d_list, "dimensions, e.g. 2,3");
  poa_cmd->add_option("--N-list", clique_list, "clique sizes, e.g. 2,3");
  poa_cmd->add_option("--alpha-list", alpha_list, "alphas, e.g. 1,2,1/2");
  poa_cmd->add_flag("--exact-opt", exact_opt, "use exhaustive optimum when n is within --opt-cap");

  CLI11_PARSE(app, argc, argv);

  auto fail = [&](int code, const std::string& message) {
    if (opts.json_errors)
      std::cout << json{{"error", message}, {"exit_code", code}}.dump() << "\n";
    else
      std::cerr << "error: " << message << "\n";
    return code;
  };

  try {
    if (validate_cmd->parsed()) return run_validate(opts, classify);
    if (cost_cmd->parsed()) return run_cost(opts);
    if (br_cmd->parsed()) return run_best_response(opts, br_agent, br_rule);
    if (certify_cmd->parsed()) return run_certify(opts, level);
    if (optimum_cmd->parsed()) return run_optimum(opts, method, stretch_k, assign_ownership);
    if (dynamics_cmd->parsed())
      return run_dynamics(opts, dyn_rule, dyn_scheduler, seed, max_steps, do_cycle_search,
                          grid_spec, max_len, restarts, verify_cert_path);
    if (family_cmd->parsed()) return run_family(opts, req);
    if (poa_cmd->parsed())
      return run_poa(opts, poa_family, n_list, d_list, clique_list, alpha_list, exact_opt);
  } catch (const CapExceeded& e) {
    return fail(3, e.what());
  } catch (const InputError& e) {
    return fail(2, e.what());
  } catch (const json::exception& e) {
    return fail(2, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(2, e.what());
  } catch (const std::overflow_error& e) {
    return fail(2, e.what());
  } catch (const std::domain_error& e) {
    return fail(2, e.what());
  } catch (const std::logic_error& e) {
    return fail(1, e.what());
  }
  return 0;
}
