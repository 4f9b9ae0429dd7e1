#pragma once

// Generators for the named lower-bound families and hardness-reduction
// instances, packaged with their strategy profiles and exact cost/ratio
// predictions. Predictions are computed from closed forms inside the
// generator, independently of the cost evaluation in game.hpp, so tests can
// cross-check the two routes.

#include <optional>
#include <string>
#include <vector>

#include "netgame/game.hpp"

namespace netgame {

struct Prediction {
  std::string name;
  Num value;
  std::string formula;
};

struct InstanceBundle {
  explicit InstanceBundle(HostGraph h) : host(std::move(h)) {}

  HostGraph host;
  std::vector<std::pair<std::string, StrategyProfile>> profiles;
  std::vector<Prediction> predictions;
  std::optional<int> designated_agent;

  const StrategyProfile& profile(const std::string& name) const;
  const Num& prediction(const std::string& name) const;
};

// Tree metric: a star with one edge of weight 1 (center to v) and n-2 edges
// of weight 2/alpha. "OPT" is the defining star owned by its center; "NE" is
// the spanning star centered at v. The cost ratio tends to (alpha+2)/2.
InstanceBundle tree_star_family(int n, const Num& alpha);

// 1-dimensional point host: a path of n+1 nodes with geometrically growing
// edge weights (first edge 1, then (2/alpha)*(1+2/alpha)^(i-2)). "OPT" is
// the path, "NE" the star at the left endpoint.
InstanceBundle geometric_path_family(int n, const Num& alpha);

// The 4-node slice of the geometric path; the ratio has the closed form
// (3a^3+24a^2+40a+24)/(a^3+10a^2+32a+24).
InstanceBundle four_node_family(const Num& alpha);

// 2d+1 points under the 1-norm: origin, one point at distance 1, and 2d-1
// points at distance 2/alpha on the axes. Ratio = 1 + alpha/(2+alpha/(2d-1)).
InstanceBundle rd_one_norm_family(int d, const Num& alpha);

// One-two host on N^2+N+1 nodes: an N-clique of 1-edges, a star of N leaves
// per clique vertex, and a hub 1-connected to everything. "NE" keeps every
// 1-edge except the hub-leaf ones. Requires 1/2 <= alpha <= 1.
InstanceBundle one_two_lb_family(int N, const Num& alpha);

// 3-node general host with weights 0, 1 and (alpha+2)/2. "OPT" is the light
// path, "NE" the path through the heavy edge; the cost ratio is (alpha+2)/2
// while the heavy pair's cost contribution ratio is ((alpha+2)/2)^2.
InstanceBundle general_triangle(const Num& alpha);

// Set-cover reduction on a tree metric (alpha = 1): the designated agent's
// exact best response buys the set nodes of a minimum cover.
// `sets` are subsets of {0,...,universe_size-1}; requires beta > |U|*eps and
// 3*beta < L.
InstanceBundle set_cover_tree_instance(int universe_size, const std::vector<std::vector<int>>& sets,
                                       const Num& L, const Num& eps, const Num& beta);

// Same reduction with planar points under the 2-norm. Set nodes sit on a
// radius-L arc, element nodes on a radius-2L arc, blockers on the opposite
// ray at radius (L-beta)/2; the generator re-checks the construction's
// distance identities after building the host.
InstanceBundle set_cover_points_instance(int universe_size,
                                         const std::vector<std::vector<int>>& sets, const Num& L,
                                         const Num& eps, const Num& beta);

// Vertex-cover gadget on a one-two host (alpha = 1): the bundled profile is
// a Nash equilibrium iff `cover` is a minimum vertex cover of the input
// graph.
InstanceBundle vertex_cover_instance(int num_vertices,
                                     const std::vector<std::pair<int, int>>& graph_edges,
                                     const std::vector<int>& cover);

// The fixed 10-point 1-norm host used to probe best-response cycles.
HostGraph brc_points();

}  // namespace netgame
