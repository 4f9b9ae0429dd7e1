#include "netgame/families.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace netgame {

namespace {

void check_rational_alpha(const Num& alpha) {
  if (!alpha.is_rational() || alpha <= Num(0))
    throw InputError("family generators need a positive rational alpha");
}

StrategyProfile star_profile(int n, int center) {
  StrategyProfile s(n);
  for (int v = 0; v < n; ++v)
    if (v != center) s.set(center, v, true);
  return s;
}

int brute_force_min_cover(int universe_size, const std::vector<std::vector<int>>& sets) {
  const int m = static_cast<int>(sets.size());
  std::uint64_t full = universe_size == 0 ? 0 : (std::uint64_t{1} << universe_size) - 1;
  std::vector<std::uint64_t> set_masks(m, 0);
  for (int i = 0; i < m; ++i)
    for (int e : sets[i]) set_masks[i] |= std::uint64_t{1} << e;
  int best = m + 1;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    std::uint64_t covered = 0;
    for (std::uint64_t b = pick; b; b &= b - 1) covered |= set_masks[std::countr_zero(b)];
    if (covered == full) best = std::min(best, std::popcount(pick));
  }
  return best;
}

void check_set_cover_input(int universe_size, const std::vector<std::vector<int>>& sets,
                           const Num& L, const Num& eps, const Num& beta) {
  if (universe_size < 1) throw InputError("universe must be non-empty");
  if (sets.empty()) throw InputError("need at least one set");
  if (!L.is_rational() || !eps.is_rational() || !beta.is_rational())
    throw InputError("L, eps and beta must be rational");
  if (eps <= Num(0)) throw InputError("eps must be positive");
  std::vector<char> covered(universe_size, 0);
  for (size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw InputError("set " + std::to_string(i) + " is empty");
    for (int e : sets[i]) {
      if (e < 0 || e >= universe_size)
        throw InputError("set " + std::to_string(i) + " contains an element outside the universe");
      covered[e] = 1;
    }
  }
  for (int e = 0; e < universe_size; ++e)
    if (!covered[e]) throw InputError("sets do not cover element " + std::to_string(e));
  if (beta <= Num(universe_size) * eps)
    throw InputError("need beta > |U| * eps, got beta = " + beta.str());
  if (Num(3) * beta >= L) throw InputError("need 3 * beta < L, got beta = " + beta.str());
}

}  // namespace

const StrategyProfile& InstanceBundle::profile(const std::string& name) const {
  for (const auto& [key, value] : profiles)
    if (key == name) return value;
  throw InputError("bundle has no profile named " + name);
}

const Num& InstanceBundle::prediction(const std::string& name) const {
  for (const Prediction& p : predictions)
    if (p.name == name) return p.value;
  throw InputError("bundle has no prediction named " + name);
}

InstanceBundle tree_star_family(int n, const Num& alpha) {
  if (n < 3) throw InputError("tree_star_family needs n >= 3");
  check_rational_alpha(alpha);
  const Num two_over_alpha = Num(2) / alpha;

  std::vector<TreeEdge> edges;
  edges.push_back({0, 1, Num(1)});
  for (int v = 2; v < n; ++v) edges.push_back({0, v, two_over_alpha});
  InstanceBundle bundle{HostGraph::from_tree(n, edges)};

  bundle.profiles.emplace_back("OPT", star_profile(n, 0));
  bundle.profiles.emplace_back("NE", star_profile(n, 1));

  const Num factor = Num(2 * n - 2) + alpha;  // 2n + alpha - 2
  const Num opt_weight = Num(n - 2) * two_over_alpha + Num(1);
  const Num ne_weight = Num(n - 2) * (Num(1) + two_over_alpha) + Num(1);
  bundle.predictions.push_back(
      {"cost_OPT", factor * opt_weight, "(2n+alpha-2)*((n-2)*(2/alpha)+1)"});
  bundle.predictions.push_back(
      {"cost_NE", factor * ne_weight, "(2n+alpha-2)*((n-2)*(1+2/alpha)+1)"});
  bundle.predictions.push_back(
      {"ratio", ne_weight / opt_weight, "((n-2)*(1+2/alpha)+1)/((n-2)*(2/alpha)+1), limit (alpha+2)/2"});
  return bundle;
}

InstanceBundle geometric_path_family(int n, const Num& alpha) {
  if (n < 2) throw InputError("geometric_path_family needs n >= 2 (n+1 nodes)");
  check_rational_alpha(alpha);
  const Num q = Num(1) + Num(2) / alpha;

  // Edge i (1-based) of the path: 1, then (2/alpha)*q^(i-2).
  std::vector<Num> edge(n + 1, Num(0));
  edge[1] = Num(1);
  Num geo = Num(2) / alpha;
  for (int i = 2; i <= n; ++i) {
    edge[i] = geo;
    geo = geo * q;
  }
  std::vector<std::vector<Num>> coords(n + 1);
  Num pos(0);
  coords[0] = {Num(0)};
  for (int i = 1; i <= n; ++i) {
    pos += edge[i];
    coords[i] = {pos};
  }
  InstanceBundle bundle{HostGraph::from_points(coords, Num(1))};

  StrategyProfile path(n + 1);
  for (int i = 0; i < n; ++i) path.set(i, i + 1, true);
  bundle.profiles.emplace_back("OPT", path);
  bundle.profiles.emplace_back("NE", star_profile(n + 1, 0));

  // Star cost: (2n+alpha) * sum of star edge weights q^(i-1).
  Num star_weight(0);
  Num power(1);
  for (int i = 1; i <= n; ++i) {
    star_weight += power;
    power = power * q;
  }
  const Num cost_star = (Num(2 * n) + alpha) * star_weight;

  // Path cost: alpha * length + twice the sum of pairwise position gaps,
  // counted per edge by how many pairs straddle it.
  Num path_dist(0);
  for (int i = 1; i <= n; ++i) path_dist += edge[i] * Num(i) * Num(n + 1 - i);
  const Num cost_path = alpha * coords[n][0] + Num(2) * path_dist;

  bundle.predictions.push_back({"cost_NE", cost_star, "(2n+alpha)*sum q^(i-1)"});
  bundle.predictions.push_back(
      {"cost_OPT", cost_path, "alpha*q^(n-1) + 2*sum_e w(e)*i*(n+1-i)"});
  bundle.predictions.push_back({"ratio", cost_star / cost_path, "cost_NE/cost_OPT, > 1 for n >= 2"});
  return bundle;
}

InstanceBundle four_node_family(const Num& alpha) {
  check_rational_alpha(alpha);
  InstanceBundle bundle = geometric_path_family(3, alpha);
  const Num a2 = alpha * alpha;
  const Num a3 = a2 * alpha;
  const Num numer = Num(3) * a3 + Num(24) * a2 + Num(40) * alpha + Num(24);
  const Num denom = a3 + Num(10) * a2 + Num(32) * alpha + Num(24);
  const Num poly = numer / denom;
  if (poly != bundle.prediction("ratio"))
    throw std::logic_error("four_node_family: polynomial ratio does not match the path family");
  for (Prediction& p : bundle.predictions)
    if (p.name == "ratio") p.formula = "(3a^3+24a^2+40a+24)/(a^3+10a^2+32a+24)";
  return bundle;
}

InstanceBundle rd_one_norm_family(int d, const Num& alpha) {
  if (d < 1) throw InputError("rd_one_norm_family needs d >= 1");
  check_rational_alpha(alpha);
  const int n = 2 * d + 1;
  const Num two_over_alpha = Num(2) / alpha;

  std::vector<std::vector<Num>> coords(n, std::vector<Num>(d, Num(0)));
  coords[1][0] = Num(1);
  coords[2][0] = Num(0) - two_over_alpha;
  for (int axis = 1; axis < d; ++axis) {
    coords[2 * axis + 1][axis] = two_over_alpha;
    coords[2 * axis + 2][axis] = Num(0) - two_over_alpha;
  }
  InstanceBundle bundle{HostGraph::from_points(coords, Num(1))};

  bundle.profiles.emplace_back("OPT", star_profile(n, 0));
  bundle.profiles.emplace_back("NE", star_profile(n, 1));

  const Num factor = Num(2 * n - 2) + alpha;
  const Num spokes = Num(2 * d - 1);
  const Num cost_opt = factor * (two_over_alpha * spokes + Num(1));
  const Num cost_ne = factor * ((Num(1) + two_over_alpha) * spokes + Num(1));
  const Num ratio = Num(1) + alpha / (Num(2) + alpha / spokes);
  if (ratio != cost_ne / cost_opt)
    throw std::logic_error("rd_one_norm_family: ratio formula mismatch");
  bundle.predictions.push_back({"cost_OPT", cost_opt, "(2(2d+1)+alpha-2)*((2/alpha)(2d-1)+1)"});
  bundle.predictions.push_back({"cost_NE", cost_ne, "(2(2d+1)+alpha-2)*((1+2/alpha)(2d-1)+1)"});
  bundle.predictions.push_back({"ratio", ratio, "1+alpha/(2+alpha/(2d-1))"});
  return bundle;
}

InstanceBundle one_two_lb_family(int N, const Num& alpha) {
  if (N < 2) throw InputError("one_two_lb_family needs N >= 2");
  if (!alpha.is_rational() || alpha < Num::ratio(1, 2) || alpha > Num(1))
    throw InputError("one_two_lb_family needs 1/2 <= alpha <= 1, got " + alpha.str());
  const int n = N * N + N + 1;
  const int hub = 0;
  auto clique = [&](int i) { return 1 + i; };                       // i in [0,N)
  auto leaf = [&](int i, int j) { return 1 + N + i * N + j; };      // leaf j of star i

  std::vector<Num> w(static_cast<size_t>(n) * n, Num(2));
  auto set_w = [&](int u, int v, long long value) {
    w[static_cast<size_t>(u) * n + v] = Num(value);
    w[static_cast<size_t>(v) * n + u] = Num(value);
  };
  for (int v = 0; v < n; ++v) {
    w[static_cast<size_t>(v) * n + v] = Num(0);
    if (v != hub) set_w(hub, v, 1);
  }
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) set_w(clique(i), clique(j), 1);
    for (int j = 0; j < N; ++j) set_w(clique(i), leaf(i, j), 1);
  }
  InstanceBundle bundle{HostGraph::one_two(n, std::move(w))};

  // NE keeps every 1-edge except hub-leaf ones; each kept edge is owned by
  // its lower-indexed endpoint.
  StrategyProfile ne(n);
  for (int i = 0; i < N; ++i) {
    ne.set(hub, clique(i), true);
    for (int j = i + 1; j < N; ++j) ne.set(clique(i), clique(j), true);
    for (int j = 0; j < N; ++j) ne.set(clique(i), leaf(i, j), true);
  }
  bundle.profiles.emplace_back("NE", ne);

  const bool alpha_is_one = alpha == Num(1);
  StrategyProfile reference(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool is_one = bundle.host.weight(u, v) == Num(1);
      if (is_one || !alpha_is_one) reference.set(u, v, true);
    }
  bundle.profiles.emplace_back(alpha_is_one ? "OPT" : "HOST", reference);

  // Exact pair counts in the NE network.
  const long long NN = N;
  const long long leaves = NN * NN;
  const long long clique_pairs = NN * (NN - 1) / 2;
  const long long same_star_pairs = NN * (NN * (NN - 1) / 2);
  const long long cross_star_pairs = leaves * (leaves - 1) / 2 - same_star_pairs;
  const long long sum_unordered = NN * 1 + leaves * 2 + clique_pairs * 1 + leaves * 1 +
                                  leaves * (NN - 1) * 2 + same_star_pairs * 2 +
                                  cross_star_pairs * 3;
  const Num ne_edge_weight = Num(NN + clique_pairs + leaves);
  const Num cost_ne = alpha * ne_edge_weight + Num(2 * sum_unordered);
  bundle.predictions.push_back({"cost_NE", cost_ne, "alpha*|E1 minus hub-leaf| + 2*sum of pair distances"});

  const long long all_pairs = static_cast<long long>(n) * (n - 1) / 2;
  const long long one_edges = (NN * NN + NN) + clique_pairs + leaves;  // hub + clique + stars
  Num reference_cost;
  if (alpha_is_one) {
    reference_cost = Num(one_edges) + Num(2) * Num(2 * all_pairs - one_edges);
    bundle.predictions.push_back({"cost_OPT", reference_cost, "all 1-edges: E1 + 2*(2P - E1)"});
  } else {
    reference_cost = (alpha + Num(2)) * Num(2 * all_pairs - one_edges);
    bundle.predictions.push_back(
        {"cost_OPT_upper", reference_cost, "whole-host upper bound (alpha+2)*(2P - E1)"});
  }
  bundle.predictions.push_back(
      {"ratio", cost_ne / reference_cost,
       alpha_is_one ? "cost_NE / cost of all 1-edges" : "cost_NE / whole-host upper bound"});
  bundle.predictions.push_back({"poa_bound", Num(3) / (alpha + Num(2)), "3/(alpha+2)"});
  return bundle;
}

InstanceBundle general_triangle(const Num& alpha) {
  check_rational_alpha(alpha);
  const Num heavy = (alpha + Num(2)) / Num(2);
  std::vector<Num> w(9, Num(0));
  auto set_w = [&](int u, int v, const Num& value) {
    w[static_cast<size_t>(u) * 3 + v] = value;
    w[static_cast<size_t>(v) * 3 + u] = value;
  };
  set_w(0, 1, Num(0));
  set_w(1, 2, Num(1));
  set_w(0, 2, heavy);
  InstanceBundle bundle{HostGraph::general(3, std::move(w))};

  StrategyProfile opt(3);
  opt.set(0, 1, true);
  opt.set(1, 2, true);
  bundle.profiles.emplace_back("OPT", opt);

  StrategyProfile ne(3);
  ne.set(0, 1, true);
  ne.set(0, 2, true);
  bundle.profiles.emplace_back("NE", ne);

  const Num cost_opt = alpha + Num(4);
  const Num cost_ne = (alpha + Num(2)) * (alpha + Num(4)) / Num(2);
  bundle.predictions.push_back({"cost_OPT", cost_opt, "alpha + 4"});
  bundle.predictions.push_back({"cost_NE", cost_ne, "(alpha+2)(alpha+4)/2"});
  bundle.predictions.push_back({"ratio", cost_ne / cost_opt, "(alpha+2)/2"});
  bundle.predictions.push_back(
      {"sigma_heavy_pair", heavy * heavy,
       "(alpha*w*x + 2 d_G)/(alpha*w*x* + 2 d_OPT) on the heavy pair = ((alpha+2)/2)^2"});
  return bundle;
}

InstanceBundle set_cover_tree_instance(int universe_size, const std::vector<std::vector<int>>& sets,
                                       const Num& L, const Num& eps, const Num& beta) {
  check_set_cover_input(universe_size, sets, L, eps, beta);
  const int m = static_cast<int>(sets.size());
  const int k = universe_size;
  const int u = 0, c = 1;
  auto a_node = [&](int i) { return 2 + i; };
  auto b_node = [&](int i) { return 2 + m + i; };
  auto p_node = [&](int j) { return 2 + 2 * m + j; };
  const int n = 2 + 2 * m + k;

  const Num half_gap = (L - beta) / Num(2);
  std::vector<TreeEdge> edges;
  edges.push_back({u, c, L - eps});
  for (int i = 0; i < m; ++i) {
    edges.push_back({c, a_node(i), eps});
    edges.push_back({u, b_node(i), half_gap});
  }
  for (int j = 0; j < k; ++j) {
    int owner_set = -1;
    for (int i = 0; i < m && owner_set < 0; ++i)
      if (std::find(sets[i].begin(), sets[i].end(), j) != sets[i].end()) owner_set = i;
    edges.push_back({a_node(owner_set), p_node(j), L});
  }
  InstanceBundle bundle{HostGraph::from_tree(n, edges)};

  StrategyProfile g(n);
  g.set(c, u, true);
  for (int i = 0; i < m; ++i) {
    g.set(b_node(i), u, true);
    g.set(b_node(i), a_node(i), true);
    for (int j : sets[i]) g.set(a_node(i), p_node(j), true);
  }
  bundle.profiles.emplace_back("G", g);
  bundle.designated_agent = u;
  bundle.predictions.push_back(
      {"min_cover_size", Num(brute_force_min_cover(universe_size, sets)), "brute-force minimum set cover"});
  return bundle;
}

InstanceBundle set_cover_points_instance(int universe_size,
                                         const std::vector<std::vector<int>>& sets, const Num& L,
                                         const Num& eps, const Num& beta) {
  check_set_cover_input(universe_size, sets, L, eps, beta);
  const int m = static_cast<int>(sets.size());
  const int k = universe_size;
  const int u = 0;
  auto a_node = [&](int i) { return 1 + i; };
  auto b_node = [&](int i) { return 1 + m + i; };
  auto p_node = [&](int j) { return 1 + 2 * m + j; };
  const int n = 1 + 2 * m + k;

  // Rational points exactly on a radius-R circle: R*((1-t^2, 2t))/(1+t^2).
  auto circle_point = [](const Num& radius, const Num& t) {
    Num t2 = t * t;
    Num denom = Num(1) + t2;
    return std::vector<Num>{radius * (Num(1) - t2) / denom, radius * Num(2) * t / denom};
  };

  std::vector<std::vector<Num>> coords(n);
  coords[u] = {Num(0), Num(0)};
  const Num da = m > 1 ? eps / (Num(2) * L * Num(m - 1)) : Num(0);
  const Num dp = k > 1 ? eps / (Num(4) * L * Num(k - 1)) : Num(0);
  const Num scale = (L - beta) / (Num(2) * L);
  for (int i = 0; i < m; ++i) {
    coords[a_node(i)] = circle_point(L, da * Num(i));
    coords[b_node(i)] = {Num(0) - scale * coords[a_node(i)][0],
                         Num(0) - scale * coords[a_node(i)][1]};
  }
  for (int j = 0; j < k; ++j) coords[p_node(j)] = circle_point(Num(2) * L, dp * Num(j));

  InstanceBundle bundle{HostGraph::from_points(coords, Num(2))};

  StrategyProfile g(n);
  for (int i = 0; i < m; ++i) {
    g.set(b_node(i), u, true);
    g.set(b_node(i), a_node(i), true);
    for (int j : sets[i]) g.set(a_node(i), p_node(j), true);
  }
  bundle.profiles.emplace_back("G", g);
  bundle.designated_agent = u;
  bundle.predictions.push_back(
      {"min_cover_size", Num(brute_force_min_cover(universe_size, sets)), "brute-force minimum set cover"});

  // The construction's distance identities, re-checked on the built host.
  const double slack = 1e-6 * L.to_double();
  auto expect = [&](double actual, double wanted, const char* what) {
    if (std::fabs(actual - wanted) > slack)
      throw std::logic_error(std::string("set_cover_points_instance: ") + what + " off by " +
                             std::to_string(actual - wanted));
  };
  const HostGraph& host = bundle.host;
  for (int i = 0; i < m; ++i) {
    expect(host.weight(u, a_node(i)).to_double(), L.to_double(), "|u a_i|");
    expect(host.weight(u, b_node(i)).to_double(), ((L - beta) / Num(2)).to_double(), "|u b_i|");
    expect(host.weight(b_node(i), a_node(i)).to_double(), (L + (L - beta) / Num(2)).to_double(),
           "|b_i a_i|");
    for (int r = i + 1; r < m; ++r)
      if (host.weight(a_node(i), a_node(r)).to_double() > eps.to_double() + slack)
        throw std::logic_error("set_cover_points_instance: set-node arc wider than eps");
  }
  for (int j = 0; j < k; ++j) {
    expect(host.weight(u, p_node(j)).to_double(), (Num(2) * L).to_double(), "|u p_j|");
    for (int r = j + 1; r < k; ++r)
      if (host.weight(p_node(j), p_node(r)).to_double() > eps.to_double() + slack)
        throw std::logic_error("set_cover_points_instance: element-node arc wider than eps");
  }
  Network network(bundle.host, g);
  for (int i = 0; i < m; ++i)
    expect(network.distance(u, a_node(i)).to_double(), (Num(2) * L - beta).to_double(),
           "d_G(u, a_i)");
  return bundle;
}

InstanceBundle vertex_cover_instance(int num_vertices,
                                     const std::vector<std::pair<int, int>>& graph_edges,
                                     const std::vector<int>& cover) {
  if (num_vertices < 1) throw InputError("vertex cover instance needs at least one vertex");
  std::set<std::pair<int, int>> edge_set;
  for (auto [a, b] : graph_edges) {
    if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices || a == b)
      throw InputError("bad graph edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    edge_set.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  const int N = num_vertices;
  const int m = static_cast<int>(edges.size());

  std::set<int> cover_set(cover.begin(), cover.end());
  for (int v : cover_set)
    if (v < 0 || v >= N) throw InputError("cover contains an invalid vertex " + std::to_string(v));
  for (auto [a, b] : edges)
    if (!cover_set.count(a) && !cover_set.count(b))
      throw InputError("cover misses edge (" + std::to_string(a) + "," + std::to_string(b) + ")");

  const int u = 0;
  auto vx_node = [&](int i) { return 1 + i; };
  auto edge_node = [&](int j, int side) { return 1 + N + 2 * j + side; };
  const int n = 1 + N + 2 * m;

  std::vector<Num> w(static_cast<size_t>(n) * n, Num(2));
  auto set_w = [&](int a, int b, long long value) {
    w[static_cast<size_t>(a) * n + b] = Num(value);
    w[static_cast<size_t>(b) * n + a] = Num(value);
  };
  for (int v = 0; v < n; ++v) w[static_cast<size_t>(v) * n + v] = Num(0);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) set_w(vx_node(i), vx_node(j), 1);
  for (int j = 0; j < m; ++j)
    for (int side = 0; side < 2; ++side) {
      set_w(vx_node(edges[j].first), edge_node(j, side), 1);
      set_w(vx_node(edges[j].second), edge_node(j, side), 1);
    }
  InstanceBundle bundle{HostGraph::one_two(n, std::move(w))};

  StrategyProfile profile(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (bundle.host.weight(a, b) == Num(1)) profile.set(a, b, true);
  for (int v : cover_set) profile.set(u, vx_node(v), true);
  bundle.profiles.emplace_back("G", profile);
  bundle.designated_agent = u;

  // Brute-force minimum vertex cover.
  int best = N;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << N); ++pick) {
    bool covers = true;
    for (auto [a, b] : edges)
      if (!((pick >> a) & 1u) && !((pick >> b) & 1u)) {
        covers = false;
        break;
      }
    if (covers) best = std::min(best, std::popcount(pick));
  }
  bundle.predictions.push_back({"cover_size", Num(static_cast<long long>(cover_set.size())), "|cover|"});
  bundle.predictions.push_back({"min_vertex_cover", Num(best), "brute-force minimum vertex cover"});
  bundle.predictions.push_back(
      {"ne_expected", Num(static_cast<long long>(cover_set.size()) == best ? 1 : 0),
       "1 iff the cover is minimum"});
  return bundle;
}

HostGraph brc_points() {
  const long long pts[10][2] = {{3, 0}, {0, 3}, {2, 2}, {0, 2}, {1, 1},
                                {4, 3}, {2, 0}, {4, 1}, {1, 4}, {1, 0}};
  std::vector<std::vector<Num>> coords;
  for (auto& p : pts) coords.push_back({Num(p[0]), Num(p[1])});
  return HostGraph::from_points(coords, Num(1));
}

}  // namespace netgame
