#include "netgame/game.hpp"

#include <algorithm>
#include <bit>

namespace netgame {

StrategyProfile StrategyProfile::from_targets(int n, const std::vector<std::vector<int>>& targets) {
  if (static_cast<int>(targets.size()) != n)
    throw InputError("profile has " + std::to_string(targets.size()) + " strategies, expected " +
                     std::to_string(n));
  StrategyProfile s(n);
  for (int u = 0; u < n; ++u)
    for (int v : targets[u]) s.set(u, v, true);
  return s;
}

void StrategyProfile::set(int u, int v, bool value) {
  if (u < 0 || u >= n_) throw InputError("agent index out of range: " + std::to_string(u));
  if (v < 0 || v >= n_)
    throw InputError("target out of range for agent " + std::to_string(u) + ": " + std::to_string(v));
  if (v == u) throw InputError("self-target for agent " + std::to_string(u));
  if (value)
    own_[u] |= std::uint64_t{1} << v;
  else
    own_[u] &= ~(std::uint64_t{1} << v);
}

std::vector<int> StrategyProfile::targets_of(int u) const {
  std::vector<int> out;
  for (std::uint64_t m = own_[u]; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<std::vector<int>> StrategyProfile::targets() const {
  std::vector<std::vector<int>> out(n_);
  for (int u = 0; u < n_; ++u) out[u] = targets_of(u);
  return out;
}

void validate_profile(const HostGraph& host, const StrategyProfile& profile) {
  if (profile.size() != host.size())
    throw InputError("profile size " + std::to_string(profile.size()) + " does not match host n = " +
                     std::to_string(host.size()));
  const std::uint64_t valid =
      host.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << host.size()) - 1;
  for (int u = 0; u < host.size(); ++u) {
    if (profile.mask(u) & ~valid) throw InputError("target out of range for agent " + std::to_string(u));
    if (profile.owns(u, u)) throw InputError("self-target for agent " + std::to_string(u));
  }
}

std::vector<std::uint64_t> adjacency_rows(const StrategyProfile& profile) {
  const int n = profile.size();
  std::vector<std::uint64_t> adj(n, 0);
  for (int u = 0; u < n; ++u) {
    adj[u] |= profile.mask(u);
    for (std::uint64_t m = profile.mask(u); m; m &= m - 1)
      adj[std::countr_zero(m)] |= std::uint64_t{1} << u;
  }
  return adj;
}

void single_source_distances(const HostGraph& host, std::span<const std::uint64_t> adj, int source,
                             std::vector<Num>& dist) {
  const int n = host.size();
  dist.assign(n, Num::infinity());
  dist[source] = Num(0);
  std::uint64_t done = 0;
  for (int round = 0; round < n; ++round) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if ((done >> v) & 1u) continue;
      if (dist[v].is_infinite()) continue;
      if (best < 0 || dist[v] < dist[best]) best = v;
    }
    if (best < 0) break;
    done |= std::uint64_t{1} << best;
    for (std::uint64_t m = adj[best] & ~done; m; m &= m - 1) {
      int v = std::countr_zero(m);
      const Num& w = host.weight(best, v);
      if (w.is_infinite()) continue;
      Num cand = dist[best] + w;
      if (dist[v].is_infinite() || cand < dist[v]) dist[v] = cand;
    }
  }
}

Num agent_cost_on(const HostGraph& host, std::span<const std::uint64_t> adj, int agent,
                  std::uint64_t own_mask, const Num& alpha, std::vector<Num>& scratch) {
  single_source_distances(host, adj, agent, scratch);
  Num dist_cost(0);
  for (int v = 0; v < host.size(); ++v) {
    if (scratch[v].is_infinite()) return Num::infinity();
    dist_cost += scratch[v];
  }
  Num edge_weight(0);
  for (std::uint64_t m = own_mask; m; m &= m - 1)
    edge_weight += host.weight(agent, std::countr_zero(m));
  return alpha * edge_weight + dist_cost;
}

Network::Network(const HostGraph& host, const StrategyProfile& profile)
    : host_(&host), profile_(profile), n_(host.size()) {
  validate_profile(host, profile);
  adj_ = adjacency_rows(profile_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if ((adj_[u] >> v) & 1u)
        edges_.push_back({u, v, host.weight(u, v), profile_.owns(u, v), profile_.owns(v, u)});
  dist_.resize(static_cast<size_t>(n_) * n_);
  std::vector<Num> row;
  for (int u = 0; u < n_; ++u) {
    single_source_distances(host, adj_, u, row);
    std::copy(row.begin(), row.end(),
              dist_.begin() + static_cast<std::ptrdiff_t>(u) * n_);
  }
}

bool Network::any_both_owner() const {
  for (const EdgeInfo& e : edges_)
    if (e.owned_by_u && e.owned_by_v) return true;
  return false;
}

bool Network::connected() const {
  for (int v = 0; v < n_; ++v)
    if (distance(0, v).is_infinite()) return false;
  return true;
}

Network induced_network(const HostGraph& host, const StrategyProfile& profile) {
  return Network(host, profile);
}

CostBreakdown agent_cost(const HostGraph& host, const StrategyProfile& profile, int agent,
                         const Num& alpha) {
  validate_profile(host, profile);
  if (agent < 0 || agent >= host.size()) throw InputError("agent index out of range");
  if (alpha.is_infinite() || alpha <= Num(0)) throw InputError("alpha must be positive and finite");
  auto adj = adjacency_rows(profile);
  std::vector<Num> dist;
  single_source_distances(host, adj, agent, dist);
  CostBreakdown out{Num(0), Num(0), Num(0)};
  for (std::uint64_t m = profile.mask(agent); m; m &= m - 1)
    out.edge_cost += alpha * host.weight(agent, std::countr_zero(m));
  for (int v = 0; v < host.size(); ++v) {
    if (dist[v].is_infinite()) {
      out.distance_cost = Num::infinity();
      break;
    }
    out.distance_cost += dist[v];
  }
  out.total = out.edge_cost + out.distance_cost;
  return out;
}

Num social_cost(const HostGraph& host, const StrategyProfile& profile, const Num& alpha) {
  Num total(0);
  for (int u = 0; u < host.size(); ++u) {
    CostBreakdown c = agent_cost(host, profile, u, alpha);
    if (c.total.is_infinite()) return Num::infinity();
    total += c.total;
  }
  return total;
}

Num stretch(const HostGraph& host, const Network& network) {
  const int n = host.size();
  Num worst(1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const Num& dg = network.distance(u, v);
      const Num& dh = host.host_distance(u, v);
      if (dh.is_zero()) {
        if (!dg.is_zero()) return Num::infinity();
        continue;
      }
      if (dg.is_infinite()) return Num::infinity();
      Num ratio = dg / dh;
      if (ratio > worst) worst = ratio;
    }
  return worst;
}

}  // namespace netgame
