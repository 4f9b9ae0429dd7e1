#include "netgame/equilibria.hpp"

#include <algorithm>
#include <bit>

namespace netgame {

namespace {

Num cost_delta(const Num& before, const Num& after) {
  if (before.is_infinite() && !after.is_infinite()) return Num::infinity();
  if (before.is_infinite() && after.is_infinite()) return Num(0);
  return before - after;
}

void check_alpha(const Num& alpha) {
  if (alpha.is_infinite() || alpha <= Num(0)) throw InputError("alpha must be positive and finite");
}

// Order used when picking one move among equally-improving ones:
// larger delta first, then add < delete < swap, then lowest target index.
bool move_preferred(const Move& a, const Move& b) {
  int c = a.delta.cmp(b.delta);
  if (c != 0) return c > 0;
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.kind == MoveKind::Swap) {
    if (a.swap_out != b.swap_out) return a.swap_out < b.swap_out;
    return a.swap_in < b.swap_in;
  }
  return a.target < b.target;
}

Num beta_ratio(const Num& current, const Num& best) {
  if (current.is_infinite()) return best.is_infinite() ? Num(1) : Num::infinity();
  if (best.is_zero()) return current.is_zero() ? Num(1) : Num::infinity();
  Num r = current / best;
  return r < Num(1) ? Num(1) : r;
}

}  // namespace

double effective_epsilon(const HostGraph& host) {
  return host.float_mode() ? host.epsilon() : 0.0;
}

bool lex_mask_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  int i = std::countr_zero(a ^ b);
  std::uint64_t above = i >= 63 ? 0 : (~std::uint64_t{0} << (i + 1));
  if ((a >> i) & 1u) return (b & above) != 0;  // a's next element is smaller unless b is a prefix
  return (a & above) == 0;                     // b's next element is smaller unless a is a prefix
}

void apply_move(StrategyProfile& profile, const Move& move) {
  switch (move.kind) {
    case MoveKind::Add: profile.set(move.agent, move.target, true); break;
    case MoveKind::Delete: profile.set(move.agent, move.target, false); break;
    case MoveKind::Swap:
      profile.set(move.agent, move.swap_out, false);
      profile.set(move.agent, move.swap_in, true);
      break;
    case MoveKind::FullStrategy: {
      std::uint64_t m = 0;
      for (int v : move.new_strategy) m |= std::uint64_t{1} << v;
      profile.set_mask(move.agent, m);
      break;
    }
  }
}

std::vector<Move> improving_single_moves(const HostGraph& host, const StrategyProfile& profile,
                                         int agent, const Num& alpha) {
  validate_profile(host, profile);
  check_alpha(alpha);
  const int n = host.size();
  const double eps = effective_epsilon(host);
  const std::uint64_t own = profile.mask(agent);
  const std::uint64_t bit_u = std::uint64_t{1} << agent;

  std::vector<std::uint64_t> adj = adjacency_rows(profile);
  std::vector<Num> scratch;
  const Num before = agent_cost_on(host, adj, agent, own, alpha, scratch);

  std::vector<Move> out;
  auto evaluate = [&](Move m, std::uint64_t new_own) {
    std::vector<std::uint64_t> mod = adj;
    // Rebuild the agent's adjacency: her row is her own edges plus edges
    // bought towards her by others; her column mirrors it.
    std::uint64_t incoming = 0;
    for (int v = 0; v < n; ++v)
      if (v != agent && profile.owns(v, agent)) incoming |= std::uint64_t{1} << v;
    mod[agent] = new_own | incoming;
    for (int v = 0; v < n; ++v) {
      if (v == agent) continue;
      if ((mod[agent] >> v) & 1u)
        mod[v] |= bit_u;
      else
        mod[v] &= ~bit_u;
    }
    Num after = agent_cost_on(host, mod, agent, new_own, alpha, scratch);
    if (!improves(before, after, eps)) return;
    m.agent = agent;
    m.cost_before = before;
    m.cost_after = after;
    m.delta = cost_delta(before, after);
    out.push_back(std::move(m));
  };

  for (int v = 0; v < n; ++v) {  // adds
    if (v == agent || profile.owns(agent, v)) continue;
    if ((adj[agent] >> v) & 1u) continue;  // other endpoint already owns it
    Move m;
    m.kind = MoveKind::Add;
    m.target = v;
    evaluate(std::move(m), own | (std::uint64_t{1} << v));
  }
  for (int v = 0; v < n; ++v) {  // deletes
    if (!profile.owns(agent, v)) continue;
    Move m;
    m.kind = MoveKind::Delete;
    m.target = v;
    evaluate(std::move(m), own & ~(std::uint64_t{1} << v));
  }
  for (int v = 0; v < n; ++v) {  // swaps
    if (!profile.owns(agent, v)) continue;
    for (int x = 0; x < n; ++x) {
      if (x == agent || x == v || profile.owns(agent, x)) continue;
      if (profile.owns(x, agent)) continue;  // buying a duplicate never beats the plain delete
      Move m;
      m.kind = MoveKind::Swap;
      m.swap_out = v;
      m.swap_in = x;
      evaluate(std::move(m),
               (own & ~(std::uint64_t{1} << v)) | (std::uint64_t{1} << x));
    }
  }
  return out;
}

BestResponse best_response_exact(const HostGraph& host, const StrategyProfile& profile, int agent,
                                 const Num& alpha, int cap) {
  validate_profile(host, profile);
  check_alpha(alpha);
  const int n = host.size();
  if (n > cap)
    throw CapExceeded("best_response_exact: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));

  // Agents other than `agent` keep their strategies; only the agent's row
  // and column of the adjacency change across candidates.
  std::vector<std::uint64_t> adj = adjacency_rows(profile);
  const std::uint64_t bit_u = std::uint64_t{1} << agent;
  std::uint64_t incoming = 0;
  for (int v = 0; v < n; ++v)
    if (v != agent && profile.owns(v, agent)) incoming |= std::uint64_t{1} << v;

  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (v != agent) others.push_back(v);
  const int m = n - 1;

  std::vector<Num> scratch;
  const bool exact = !host.float_mode();
  Num edge_weight(0);  // incrementally tracked in exact mode
  std::uint64_t best_mask = 0;
  Num best_cost;
  int best_count = 0;
  bool have_best = false;

  std::uint64_t gray_prev = 0;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i) {
    std::uint64_t gray = i ^ (i >> 1);
    if (i > 0) {
      int flipped = std::countr_zero(gray ^ gray_prev);
      const Num& w = host.weight(agent, others[flipped]);
      if (exact && !w.is_infinite())
        edge_weight = (gray >> flipped) & 1u ? edge_weight + w : edge_weight - w;
    }
    gray_prev = gray;

    std::uint64_t own_mask = 0;
    for (std::uint64_t g = gray; g; g &= g - 1)
      own_mask |= std::uint64_t{1} << others[std::countr_zero(g)];

    std::uint64_t row = own_mask | incoming;
    adj[agent] = row;
    for (int v = 0; v < n; ++v) {
      if (v == agent) continue;
      if ((row >> v) & 1u)
        adj[v] |= bit_u;
      else
        adj[v] &= ~bit_u;
    }

    single_source_distances(host, adj, agent, scratch);
    Num cost;
    bool disconnected = false;
    Num dist_sum(0);
    for (int v = 0; v < n; ++v) {
      if (scratch[v].is_infinite()) {
        disconnected = true;
        break;
      }
      dist_sum += scratch[v];
    }
    if (disconnected) {
      cost = Num::infinity();
    } else {
      Num ew = edge_weight;
      if (!exact) {
        ew = Num(0);
        for (std::uint64_t g = own_mask; g; g &= g - 1)
          ew += host.weight(agent, std::countr_zero(g));
      }
      cost = alpha * ew + dist_sum;
    }

    int count = std::popcount(own_mask);
    bool better = false;
    if (!have_best) {
      better = true;
    } else {
      int c = cost.cmp(best_cost);
      if (c < 0)
        better = true;
      else if (c == 0) {
        if (count != best_count)
          better = count < best_count;
        else
          better = lex_mask_less(own_mask, best_mask);
      }
    }
    if (better) {
      have_best = true;
      best_cost = cost;
      best_count = count;
      best_mask = own_mask;
    }
  }

  BestResponse out;
  out.cost = best_cost;
  for (std::uint64_t g = best_mask; g; g &= g - 1) out.strategy.push_back(std::countr_zero(g));
  return out;
}

std::vector<int> greedy_stable_response(const HostGraph& host, const StrategyProfile& profile,
                                        int agent, const Num& alpha) {
  StrategyProfile cur = profile;
  for (;;) {
    std::vector<Move> moves = improving_single_moves(host, cur, agent, alpha);
    if (moves.empty()) return cur.targets_of(agent);
    const Move* best = &moves.front();
    for (const Move& m : moves)
      if (move_preferred(m, *best)) best = &m;
    apply_move(cur, *best);
  }
}

bool is_nash_equilibrium(const HostGraph& host, const StrategyProfile& profile, const Num& alpha,
                         int cap) {
  const double eps = effective_epsilon(host);
  std::vector<std::uint64_t> adj = adjacency_rows(profile);
  std::vector<Num> scratch;
  for (int u = 0; u < host.size(); ++u) {
    Num current = agent_cost_on(host, adj, u, profile.mask(u), alpha, scratch);
    BestResponse br = best_response_exact(host, profile, u, alpha, cap);
    if (improves(current, br.cost, eps)) return false;
  }
  return true;
}

EquilibriumReport certify(const HostGraph& host, const StrategyProfile& profile, const Num& alpha,
                          Level level, int cap) {
  validate_profile(host, profile);
  check_alpha(alpha);
  const int n = host.size();
  const double eps = effective_epsilon(host);
  if (level == Level::NE && n > cap)
    throw CapExceeded("certify: NE level requires n <= cap, got n = " + std::to_string(n));

  EquilibriumReport report;
  report.epsilon_used = eps;

  std::vector<std::uint64_t> adj = adjacency_rows(profile);
  std::vector<Num> scratch;
  std::vector<Num> current(n);
  for (int u = 0; u < n; ++u)
    current[u] = agent_cost_on(host, adj, u, profile.mask(u), alpha, scratch);

  report.ae.stable = true;
  LevelVerdict ge;
  ge.stable = true;
  Num beta_ge(1);

  for (int u = 0; u < n; ++u) {
    std::vector<Move> moves = improving_single_moves(host, profile, u, alpha);
    Num best_single = current[u];
    const Move* best_add = nullptr;
    const Move* best_any = nullptr;
    for (const Move& m : moves) {
      if (m.cost_after < best_single) best_single = m.cost_after;
      if (!best_any || move_preferred(m, *best_any)) best_any = &m;
      if (m.kind == MoveKind::Add && (!best_add || move_preferred(m, *best_add))) best_add = &m;
    }
    if (best_add && report.ae.stable) {
      report.ae.stable = false;
      report.ae.witness = *best_add;
    }
    if (best_any && ge.stable) {
      ge.stable = false;
      ge.witness = *best_any;
    }
    Num b = beta_ratio(current[u], best_single);
    if (b > beta_ge) beta_ge = b;
  }

  if (level == Level::AE) return report;

  report.ge = ge;
  report.beta_ge = beta_ge;
  if (level == Level::GE) return report;

  LevelVerdict ne;
  ne.stable = true;
  Num beta_ne(1);
  for (int u = 0; u < n; ++u) {
    BestResponse br = best_response_exact(host, profile, u, alpha, cap);
    if (improves(current[u], br.cost, eps) && ne.stable) {
      Move witness;
      witness.agent = u;
      witness.kind = MoveKind::FullStrategy;
      witness.new_strategy = br.strategy;
      witness.cost_before = current[u];
      witness.cost_after = br.cost;
      witness.delta = cost_delta(current[u], br.cost);
      ne.stable = false;
      ne.witness = witness;
    }
    Num b = beta_ratio(current[u], br.cost);
    if (b > beta_ne) beta_ne = b;
  }
  report.ne = ne;
  report.beta_ne = beta_ne;
  report.ne_certified_exactly = true;
  return report;
}

std::pair<Num, Num> approx_factors(const HostGraph& host, const StrategyProfile& profile,
                                   const Num& alpha, int cap) {
  EquilibriumReport report = certify(host, profile, alpha, Level::NE, cap);
  return {*report.beta_ge, *report.beta_ne};
}

}  // namespace netgame
