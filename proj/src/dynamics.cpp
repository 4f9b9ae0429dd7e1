#include "netgame/dynamics.hpp"

#include <bit>
#include <algorithm>
#include <random>

namespace netgame {

namespace {

// One move under the rule for the scheduled agent, or nullopt if the agent
// has nothing improving to do.
std::optional<Move> move_for(const HostGraph& host, const StrategyProfile& profile, int agent,
                             const Num& alpha, const DynamicsConfig& config) {
  const double eps = effective_epsilon(host);
  if (config.rule == MoveRule::ExactBestResponse) {
    std::vector<std::uint64_t> adj = adjacency_rows(profile);
    std::vector<Num> scratch;
    Num current = agent_cost_on(host, adj, agent, profile.mask(agent), alpha, scratch);
    BestResponse br = best_response_exact(host, profile, agent, alpha, config.br_cap);
    if (!improves(current, br.cost, eps)) return std::nullopt;
    Move m;
    m.agent = agent;
    m.kind = MoveKind::FullStrategy;
    m.new_strategy = br.strategy;
    m.cost_before = current;
    m.cost_after = br.cost;
    m.delta = current.is_infinite() ? Num::infinity() : current - br.cost;
    return m;
  }
  std::vector<Move> moves = improving_single_moves(host, profile, agent, alpha);
  if (moves.empty()) return std::nullopt;
  const Move* best = &moves.front();
  for (const Move& m : moves) {
    int c = m.delta.cmp(best->delta);
    bool preferred = c > 0;
    if (c == 0) {
      if (m.kind != best->kind)
        preferred = static_cast<int>(m.kind) < static_cast<int>(best->kind);
      else if (m.kind == MoveKind::Swap)
        preferred = std::pair(m.swap_out, m.swap_in) < std::pair(best->swap_out, best->swap_in);
      else
        preferred = m.target < best->target;
    }
    if (preferred) best = &m;
  }
  return *best;
}

}  // namespace

std::string move_rule_name(MoveRule r) {
  return r == MoveRule::ExactBestResponse ? "exact-br" : "greedy-single";
}

std::string scheduler_name(SchedulerKind s) {
  return s == SchedulerKind::RoundRobin ? "round-robin" : "random";
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Converged: return "converged";
    case Outcome::Cycle: return "cycle";
    case Outcome::BudgetExhausted: return "budget_exhausted";
  }
  return "budget_exhausted";
}

DynamicsTrace run(const HostGraph& host, const Num& alpha, const StrategyProfile& init,
                  const DynamicsConfig& config) {
  validate_profile(host, init);
  const int n = host.size();

  DynamicsTrace trace;
  trace.initial = init;
  trace.config = config;

  StrategyProfile current = init;
  std::map<std::vector<std::uint64_t>, int> seen;  // profile key -> index (0 = initial)
  seen[current.key()] = 0;

  std::mt19937_64 rng(config.seed);
  int rr_next = 0;

  auto all_stable = [&]() {
    for (int u = 0; u < n; ++u)
      if (move_for(host, current, u, alpha, config)) return false;
    return true;
  };

  int stable_streak = 0;
  while (static_cast<int>(trace.steps.size()) < config.max_steps) {
    int agent;
    if (config.scheduler == SchedulerKind::RoundRobin) {
      agent = rr_next;
      rr_next = (rr_next + 1) % n;
    } else {
      agent = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    }

    std::optional<Move> move = move_for(host, current, agent, alpha, config);
    if (!move) {
      if (config.scheduler == SchedulerKind::RoundRobin) {
        if (++stable_streak >= n) {
          trace.outcome = Outcome::Converged;
          trace.final_profile = current;
          return trace;
        }
      } else if (all_stable()) {
        trace.outcome = Outcome::Converged;
        trace.final_profile = current;
        return trace;
      }
      continue;
    }
    stable_streak = 0;

    apply_move(current, *move);
    trace.steps.push_back({agent, *move, current});

    auto [it, inserted] = seen.try_emplace(current.key(), static_cast<int>(trace.steps.size()));
    if (!inserted) {
      // The strategy vector at index it->second recurred: steps
      // it->second+1 .. now form a closed loop of improving moves.
      CycleCertificate cert;
      for (int t = it->second; t < static_cast<int>(trace.steps.size()); ++t) {
        const StrategyProfile& before = t == 0 ? trace.initial : trace.steps[t - 1].after;
        CycleStep step;
        step.before = before;
        step.mover = trace.steps[t].agent;
        StrategyProfile after = trace.steps[t].after;
        step.new_strategy = after.targets_of(step.mover);
        cert.steps.push_back(std::move(step));
      }
      trace.outcome = Outcome::Cycle;
      trace.cycle = std::move(cert);
      return trace;
    }
  }
  trace.outcome = Outcome::BudgetExhausted;
  return trace;
}

CycleVerdict verify_cycle(const HostGraph& host, const Num& alpha, const CycleCertificate& cert,
                          MoveRule rule, int br_cap) {
  const double eps = effective_epsilon(host);
  if (cert.steps.size() < 2) return {false, 0, "a cycle needs at least 2 steps"};

  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const CycleStep& step = cert.steps[i];
    try {
      validate_profile(host, step.before);
    } catch (const InputError& e) {
      return {false, static_cast<int>(i), std::string("bad profile: ") + e.what()};
    }
    if (step.mover < 0 || step.mover >= host.size())
      return {false, static_cast<int>(i), "mover out of range"};

    std::uint64_t new_mask = 0;
    for (int v : step.new_strategy) {
      if (v < 0 || v >= host.size() || v == step.mover)
        return {false, static_cast<int>(i), "bad target in new strategy"};
      new_mask |= std::uint64_t{1} << v;
    }
    if (new_mask == step.before.mask(step.mover))
      return {false, static_cast<int>(i), "step does not change the mover's strategy"};
    if (rule == MoveRule::GreedySingle) {
      std::uint64_t old_mask = step.before.mask(step.mover);
      int added = std::popcount(new_mask & ~old_mask);
      int removed = std::popcount(old_mask & ~new_mask);
      if (added > 1 || removed > 1)
        return {false, static_cast<int>(i), "step is not a single add, delete or swap"};
    }

    std::vector<std::uint64_t> adj = adjacency_rows(step.before);
    std::vector<Num> scratch;
    Num before_cost =
        agent_cost_on(host, adj, step.mover, step.before.mask(step.mover), alpha, scratch);

    StrategyProfile next = step.before;
    next.set_mask(step.mover, new_mask);
    std::vector<std::uint64_t> adj_after = adjacency_rows(next);
    Num after_cost = agent_cost_on(host, adj_after, step.mover, new_mask, alpha, scratch);

    if (!improves(before_cost, after_cost, eps))
      return {false, static_cast<int>(i), "step is not strictly improving for its mover"};

    if (rule == MoveRule::ExactBestResponse) {
      BestResponse br = best_response_exact(host, step.before, step.mover, alpha, br_cap);
      if (!approx_equal(after_cost, br.cost, eps))
        return {false, static_cast<int>(i), "step is not cost-minimal for its mover"};
    }

    const StrategyProfile& expected =
        i + 1 < cert.steps.size() ? cert.steps[i + 1].before : cert.steps[0].before;
    if (next != expected)
      return {false, static_cast<int>(i),
              i + 1 < cert.steps.size() ? "consecutive profiles do not match"
                                        : "sequence does not close on the first profile"};
  }
  return {true, -1, ""};
}

std::vector<FoundCycle> cycle_search(const HostGraph& host, const std::vector<Num>& alpha_grid,
                                     int max_len, int restarts, std::uint64_t seed, MoveRule rule) {
  const int n = host.size();
  std::vector<FoundCycle> found;
  std::vector<std::vector<std::vector<std::uint64_t>>> seen_keys;  // rotation-minimal cycle keys

  auto cycle_key = [](const CycleCertificate& cert) {
    std::vector<std::vector<std::uint64_t>> seq;
    for (const CycleStep& s : cert.steps) seq.push_back(s.before.key());
    // Rotate so the lexicographically smallest profile key comes first.
    size_t best = 0;
    for (size_t i = 1; i < seq.size(); ++i)
      if (seq[i] < seq[best]) best = i;
    std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(best), seq.end());
    return seq;
  };

  for (size_t ai = 0; ai < alpha_grid.size(); ++ai) {
    const Num& alpha = alpha_grid[ai];
    for (int r = 0; r < restarts; ++r) {
      std::uint64_t run_seed = seed + 0x9e3779b97f4a7c15ULL * (ai * restarts + r + 1);
      std::mt19937_64 rng(run_seed);
      StrategyProfile init(n);
      if (r % 2 == 0) {
        // Sparse start: a few targets per agent, the regime where
        // best-response play actually happens.
        for (int u = 0; u < n; ++u) {
          int picks = static_cast<int>(rng() % 3);
          for (int i = 0; i < picks; ++i) {
            int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            if (v != u) init.set(u, v, true);
          }
        }
      } else {
        for (int u = 0; u < n; ++u) {
          std::uint64_t mask = rng();
          mask &= (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
          mask &= ~(std::uint64_t{1} << u);
          init.set_mask(u, mask);
        }
      }

      DynamicsConfig config;
      config.rule = rule;
      config.scheduler = SchedulerKind::Random;
      config.seed = run_seed ^ 0x5851f42d4c957f2dULL;
      config.max_steps = 10 * max_len + 20;  // runway for reaching a cycle
      DynamicsTrace trace = run(host, alpha, init, config);
      if (trace.outcome != Outcome::Cycle) continue;
      if (static_cast<int>(trace.cycle->steps.size()) > max_len) continue;
      CycleVerdict verdict = verify_cycle(host, alpha, *trace.cycle, rule);
      if (!verdict.accepted) continue;
      auto key = cycle_key(*trace.cycle);
      bool duplicate = false;
      for (const auto& k : seen_keys)
        if (k == key) {
          duplicate = true;
          break;
        }
      if (duplicate) continue;
      seen_keys.push_back(std::move(key));
      found.push_back({alpha, *trace.cycle});
    }
  }
  return found;
}

}  // namespace netgame
