#pragma once

// Social optima and minimum-weight spanners. Edge sets are priced with
// single ownership: each edge is paid for once, so the social cost of an
// edge set is alpha * total_weight + sum over agents of their distance cost.

#include <optional>
#include <utility>
#include <vector>

#include "netgame/game.hpp"

namespace netgame {

struct EdgeSet {
  std::vector<std::pair<int, int>> edges;  // sorted, u < v
  Num total_weight;
  Num social_cost;
  Num alpha;
};

Num edge_set_social_cost(const HostGraph& host, const std::vector<std::pair<int, int>>& edges,
                         const Num& alpha);

// Exhaustive minimum over all edge subsets; ties broken by fewest edges,
// then lexicographically smallest edge list. Cap bounds n (2^(n(n-1)/2)).
EdgeSet optimum_exact(const HostGraph& host, const Num& alpha, int cap = 7);

// Social optimum for one-two hosts with 0 < alpha <= 1: start from the
// complete edge set and drop every 2-edge that closes a 1-1-2 triangle.
EdgeSet optimum_one_two(const HostGraph& host, const Num& alpha);

// Social optimum for tree hosts: the defining tree.
EdgeSet optimum_tree(const HostGraph& host, const Num& alpha);

// Minimum-total-weight edge subset whose induced subgraph is connected and
// has stretch <= k; k = +infinity asks only for connectivity (an MST).
EdgeSet min_weight_spanner(const HostGraph& host, const Num& k, const Num& alpha, int cap = 7);

// Searches the 2^|E| single-owner orientations of a spanner for one whose
// profile is a Nash equilibrium. Requires 1/2 <= alpha <= 1. Returns nullopt
// when no orientation works.
std::optional<StrategyProfile> spanner_ne_ownership(const HostGraph& host, const EdgeSet& spanner,
                                                    const Num& alpha, int edge_cap = 18);

}  // namespace netgame
