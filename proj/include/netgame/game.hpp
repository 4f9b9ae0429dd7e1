#pragma once

// Strategy profiles, the networks they induce, exact distances and costs.
// An agent's cost is alpha * (total weight of edges she owns) plus the sum
// of her network distances to all nodes, +infinity when disconnected.

#include <cstdint>
#include <span>
#include <vector>

#include "netgame/hostgraph.hpp"
#include "netgame/num.hpp"

namespace netgame {

class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(int n) : n_(n), own_(n, 0) {}
  static StrategyProfile from_targets(int n, const std::vector<std::vector<int>>& targets);

  int size() const { return n_; }
  bool owns(int u, int v) const { return (own_[u] >> v) & 1u; }
  void set(int u, int v, bool value);
  std::uint64_t mask(int u) const { return own_[u]; }
  void set_mask(int u, std::uint64_t m) { own_[u] = m; }

  std::vector<int> targets_of(int u) const;
  std::vector<std::vector<int>> targets() const;

  // Canonical identity: the ownership masks. Used for cycle detection.
  const std::vector<std::uint64_t>& key() const { return own_; }
  bool operator==(const StrategyProfile& o) const { return n_ == o.n_ && own_ == o.own_; }
  bool operator!=(const StrategyProfile& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> own_;
};

struct EdgeInfo {
  int u, v;  // u < v
  Num w;
  bool owned_by_u, owned_by_v;
};

class Network {
 public:
  Network(const HostGraph& host, const StrategyProfile& profile);

  int size() const { return n_; }
  const HostGraph& host() const { return *host_; }
  const StrategyProfile& profile() const { return profile_; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  const std::vector<EdgeInfo>& edges() const { return edges_; }
  bool any_both_owner() const;
  const Num& distance(int u, int v) const { return dist_[static_cast<size_t>(u) * n_ + v]; }
  const std::vector<Num>& distance_matrix() const { return dist_; }
  bool connected() const;

 private:
  const HostGraph* host_;
  StrategyProfile profile_;
  int n_;
  std::vector<std::uint64_t> adj_;
  std::vector<EdgeInfo> edges_;
  std::vector<Num> dist_;
};

Network induced_network(const HostGraph& host, const StrategyProfile& profile);

struct CostBreakdown {
  Num edge_cost;
  Num distance_cost;
  Num total;
};

CostBreakdown agent_cost(const HostGraph& host, const StrategyProfile& profile, int agent,
                         const Num& alpha);
Num social_cost(const HostGraph& host, const StrategyProfile& profile, const Num& alpha);

// Max over node pairs of d_G(u,v) / d_H(u,v). Pairs with d_H = 0 must have
// d_G = 0 (otherwise the stretch is +infinity) and are excluded from the
// ratio. Disconnected networks have infinite stretch.
Num stretch(const HostGraph& host, const Network& network);

// --- low-level evaluation core (shared with equilibria/optima/dynamics) ---

// Undirected adjacency rows induced by ownership masks.
std::vector<std::uint64_t> adjacency_rows(const StrategyProfile& profile);

// Exact single-source shortest paths over the masked subgraph; weights come
// from the host. O(n^2) Dijkstra, valid for non-negative weights.
void single_source_distances(const HostGraph& host, std::span<const std::uint64_t> adj, int source,
                             std::vector<Num>& dist);

// Agent's total cost given adjacency rows and her ownership mask.
Num agent_cost_on(const HostGraph& host, std::span<const std::uint64_t> adj, int agent,
                  std::uint64_t own_mask, const Num& alpha, std::vector<Num>& scratch);

void validate_profile(const HostGraph& host, const StrategyProfile& profile);

}  // namespace netgame
