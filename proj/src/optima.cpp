#include "netgame/optima.hpp"

#include <algorithm>
#include <bit>

#include "netgame/equilibria.hpp"

namespace netgame {

namespace {

void check_alpha(const Num& alpha) {
  if (alpha.is_infinite() || alpha <= Num(0)) throw InputError("alpha must be positive and finite");
}

std::vector<std::uint64_t> rows_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [u, v] : edges) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

// Total distance cost over all agents; +infinity when disconnected.
Num total_distance_cost(const HostGraph& host, std::span<const std::uint64_t> adj,
                        std::vector<Num>& scratch) {
  Num total(0);
  for (int u = 0; u < host.size(); ++u) {
    single_source_distances(host, adj, u, scratch);
    for (int v = 0; v < host.size(); ++v) {
      if (scratch[v].is_infinite()) return Num::infinity();
      total += scratch[v];
    }
  }
  return total;
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

EdgeSet make_edge_set(const HostGraph& host, std::vector<std::pair<int, int>> edges,
                      const Num& alpha) {
  std::sort(edges.begin(), edges.end());
  EdgeSet out;
  out.edges = std::move(edges);
  out.alpha = alpha;
  out.total_weight = Num(0);
  for (auto [u, v] : out.edges) out.total_weight += host.weight(u, v);
  out.social_cost = edge_set_social_cost(host, out.edges, alpha);
  return out;
}

// Stretch of the subgraph given by adjacency rows; +infinity if disconnected.
Num mask_stretch(const HostGraph& host, std::span<const std::uint64_t> adj,
                 std::vector<Num>& scratch) {
  const int n = host.size();
  Num worst(1);
  for (int u = 0; u < n; ++u) {
    single_source_distances(host, adj, u, scratch);
    for (int v = u + 1; v < n; ++v) {
      const Num& dh = host.host_distance(u, v);
      if (dh.is_zero()) {
        if (!scratch[v].is_zero()) return Num::infinity();
        continue;
      }
      if (scratch[v].is_infinite()) return Num::infinity();
      Num r = scratch[v] / dh;
      if (r > worst) worst = r;
    }
  }
  return worst;
}

}  // namespace

Num edge_set_social_cost(const HostGraph& host, const std::vector<std::pair<int, int>>& edges,
                         const Num& alpha) {
  check_alpha(alpha);
  Num weight(0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= host.size() || v >= host.size() || u == v)
      throw InputError("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    weight += host.weight(u, v);
  }
  std::vector<std::uint64_t> adj = rows_from_edges(host.size(), edges);
  std::vector<Num> scratch;
  Num dist = total_distance_cost(host, adj, scratch);
  if (dist.is_infinite()) return Num::infinity();
  return alpha * weight + dist;
}

EdgeSet optimum_exact(const HostGraph& host, const Num& alpha, int cap) {
  check_alpha(alpha);
  const int n = host.size();
  if (n > cap)
    throw CapExceeded("optimum_exact: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  const auto pairs = all_pairs(n);
  const int m = static_cast<int>(pairs.size());

  std::vector<std::uint64_t> adj(n, 0);
  std::vector<Num> scratch;
  std::uint64_t best_mask = 0;
  Num best_cost = Num::infinity();
  int best_count = 0;
  bool have_best = false;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(adj.begin(), adj.end(), 0);
    Num weight(0);
    for (std::uint64_t b = mask; b; b &= b - 1) {
      auto [u, v] = pairs[std::countr_zero(b)];
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
      weight += host.weight(u, v);
    }
    Num dist = total_distance_cost(host, adj, scratch);
    Num cost = dist.is_infinite() ? Num::infinity() : alpha * weight + dist;
    int count = std::popcount(mask);
    bool better = false;
    if (!have_best) {
      better = true;
    } else {
      int c = cost.cmp(best_cost);
      if (c < 0)
        better = true;
      else if (c == 0)
        better = count != best_count ? count < best_count : lex_mask_less(mask, best_mask);
    }
    if (better) {
      have_best = true;
      best_cost = cost;
      best_count = count;
      best_mask = mask;
    }
  }

  std::vector<std::pair<int, int>> edges;
  for (std::uint64_t b = best_mask; b; b &= b - 1) edges.push_back(pairs[std::countr_zero(b)]);
  return make_edge_set(host, std::move(edges), alpha);
}

EdgeSet optimum_one_two(const HostGraph& host, const Num& alpha) {
  check_alpha(alpha);
  if (host.kind() != HostKind::OneTwo)
    throw InputError("optimum_one_two requires a one-two host, got " + host_kind_name(host.kind()));
  if (alpha > Num(1)) throw InputError("optimum_one_two requires alpha <= 1");
  const int n = host.size();
  std::vector<std::uint64_t> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (v != u) adj[u] |= std::uint64_t{1} << v;

  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n && !changed; ++u)
      for (int v = u + 1; v < n && !changed; ++v) {
        if (!((adj[u] >> v) & 1u) || host.weight(u, v) != Num(2)) continue;
        for (int x = 0; x < n; ++x) {
          if (x == u || x == v) continue;
          if (((adj[u] >> x) & 1u) && ((adj[x] >> v) & 1u) && host.weight(u, x) == Num(1) &&
              host.weight(x, v) == Num(1)) {
            adj[u] &= ~(std::uint64_t{1} << v);
            adj[v] &= ~(std::uint64_t{1} << u);
            changed = true;
            break;
          }
        }
      }
  }

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((adj[u] >> v) & 1u) edges.emplace_back(u, v);
  return make_edge_set(host, std::move(edges), alpha);
}

EdgeSet optimum_tree(const HostGraph& host, const Num& alpha) {
  check_alpha(alpha);
  if (host.kind() != HostKind::Tree)
    throw InputError("optimum_tree requires a tree host, got " + host_kind_name(host.kind()));
  std::vector<std::pair<int, int>> edges;
  for (const TreeEdge& e : *host.defining_tree())
    edges.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  return make_edge_set(host, std::move(edges), alpha);
}

EdgeSet min_weight_spanner(const HostGraph& host, const Num& k, const Num& alpha, int cap) {
  check_alpha(alpha);
  if (!k.is_infinite() && k < Num(1)) throw InputError("spanner stretch must be >= 1");
  const int n = host.size();
  if (n > cap)
    throw CapExceeded("min_weight_spanner: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  const auto pairs = all_pairs(n);
  const int m = static_cast<int>(pairs.size());

  std::vector<std::uint64_t> adj(n, 0);
  std::vector<Num> scratch;
  std::uint64_t best_mask = 0;
  Num best_weight;
  int best_count = 0;
  bool have_best = false;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(adj.begin(), adj.end(), 0);
    Num weight(0);
    for (std::uint64_t b = mask; b; b &= b - 1) {
      auto [u, v] = pairs[std::countr_zero(b)];
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
      weight += host.weight(u, v);
    }
    Num s = mask_stretch(host, adj, scratch);
    if (s.is_infinite()) continue;           // disconnected
    if (!k.is_infinite() && s > k) continue;
    int count = std::popcount(mask);
    bool better = false;
    if (!have_best) {
      better = true;
    } else {
      int c = weight.cmp(best_weight);
      if (c < 0)
        better = true;
      else if (c == 0)
        better = count != best_count ? count < best_count : lex_mask_less(mask, best_mask);
    }
    if (better) {
      have_best = true;
      best_weight = weight;
      best_count = count;
      best_mask = mask;
    }
  }
  if (!have_best) throw InputError("no subgraph meets the stretch bound");  // unreachable for finite hosts

  std::vector<std::pair<int, int>> edges;
  for (std::uint64_t b = best_mask; b; b &= b - 1) edges.push_back(pairs[std::countr_zero(b)]);
  return make_edge_set(host, std::move(edges), alpha);
}

std::optional<StrategyProfile> spanner_ne_ownership(const HostGraph& host, const EdgeSet& spanner,
                                                    const Num& alpha, int edge_cap) {
  check_alpha(alpha);
  if (alpha < Num::ratio(1, 2) || alpha > Num(1))
    throw InputError("spanner_ne_ownership requires 1/2 <= alpha <= 1, got " + alpha.str());
  const int m = static_cast<int>(spanner.edges.size());
  if (m > edge_cap)
    throw CapExceeded("spanner_ne_ownership: " + std::to_string(m) + " edges exceed cap " +
                      std::to_string(edge_cap));

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    StrategyProfile profile(host.size());
    for (int i = 0; i < m; ++i) {
      auto [u, v] = spanner.edges[i];
      if ((mask >> i) & 1u)
        profile.set(v, u, true);
      else
        profile.set(u, v, true);
    }
    if (is_nash_equilibrium(host, profile, alpha)) return profile;
  }
  return std::nullopt;
}

}  // namespace netgame
