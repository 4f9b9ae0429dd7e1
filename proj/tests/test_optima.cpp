#include <doctest.h>

#include <set>

#include "netgame/equilibria.hpp"
#include "netgame/families.hpp"
#include "netgame/optima.hpp"
#include "oracle.hpp"

using namespace netgame;

namespace {

HostGraph one_two_triangle(long long w01, long long w12, long long w02) {
  std::vector<Num> w(9, Num(0));
  w[0 * 3 + 1] = w[1 * 3 + 0] = Num(w01);
  w[1 * 3 + 2] = w[2 * 3 + 1] = Num(w12);
  w[0 * 3 + 2] = w[2 * 3 + 0] = Num(w02);
  return HostGraph::one_two(3, w);
}

// Plain Kruskal, used as the independent oracle for the k = infinity case.
Num mst_weight(const HostGraph& h) {
  std::vector<std::tuple<int, int>> edges;
  for (int u = 0; u < h.size(); ++u)
    for (int v = u + 1; v < h.size(); ++v) edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end(), [&](auto a, auto b) {
    return h.weight(std::get<0>(a), std::get<1>(a)) < h.weight(std::get<0>(b), std::get<1>(b));
  });
  std::vector<int> parent(h.size());
  for (int i = 0; i < h.size(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Num total(0);
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a == b) continue;
    parent[a] = b;
    total += h.weight(u, v);
  }
  return total;
}

}  // namespace

TEST_CASE("exhaustive optimum on the one-two triangle") {
  HostGraph h = one_two_triangle(1, 1, 2);
  EdgeSet opt = optimum_exact(h, Num::ratio(2, 5));
  CHECK(opt.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(opt.total_weight == Num(2));
  CHECK(opt.social_cost == Num::ratio(44, 5));  // 0.4 * 2 + 8
  CHECK_THROWS_AS(optimum_exact(h, Num(1), 2), CapExceeded);
}

TEST_CASE("exhaustive optimum matches the defining tree on tree hosts") {
  oracle::Rng rng(5);
  for (int round = 0; round < 6; ++round) {
    int n = rng.between(3, 5);
    HostGraph h = oracle::random_tree_host(rng, n);
    Num alpha = Num::ratio(rng.between(1, 5), 2);
    EdgeSet exact = optimum_exact(h, alpha);
    EdgeSet tree = optimum_tree(h, alpha);
    CHECK(exact.social_cost == tree.social_cost);
  }
}

TEST_CASE("exhaustive optimum on the 0/1/heavy triangle at alpha = 2") {
  InstanceBundle bundle = general_triangle(Num(2));
  EdgeSet opt = optimum_exact(bundle.host, Num(2));
  CHECK(opt.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(opt.social_cost == Num(6));
}

TEST_CASE("triangle pruning on one-two hosts") {
  CHECK(optimum_one_two(one_two_triangle(1, 1, 2), Num::ratio(1, 2)).edges ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(optimum_one_two(one_two_triangle(2, 2, 2), Num(1)).edges.size() == 3);
  InstanceBundle tri = general_triangle(Num(2));
  CHECK_THROWS_AS(optimum_one_two(tri.host, Num(1)), InputError);
  CHECK_THROWS_AS(optimum_one_two(one_two_triangle(1, 1, 2), Num(2)), InputError);
}

TEST_CASE("triangle pruning agrees with the exhaustive optimum") {
  oracle::Rng rng(13);
  for (int round = 0; round < 8; ++round) {
    HostGraph h = oracle::random_one_two_host(rng, 6);
    for (Num alpha : {Num::ratio(1, 4), Num::ratio(3, 4), Num(1)}) {
      EdgeSet fast = optimum_one_two(h, alpha);
      EdgeSet exact = optimum_exact(h, alpha, 6);
      CHECK(fast.social_cost == exact.social_cost);
    }
  }
}

TEST_CASE("triangle pruning keeps all 1-edges and diameter at most 2") {
  oracle::Rng rng(14);
  for (int round = 0; round < 10; ++round) {
    HostGraph h = oracle::random_one_two_host(rng, 6);
    EdgeSet pruned = optimum_one_two(h, Num(1));
    std::set<std::pair<int, int>> kept(pruned.edges.begin(), pruned.edges.end());
    StrategyProfile s(6);
    for (auto [u, v] : pruned.edges) s.set(u, v, true);
    Network g(h, s);
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) {
        if (h.weight(u, v) == Num(1)) CHECK(kept.count({u, v}) > 0);
        CHECK(g.distance(u, v) <= Num(2));
      }
  }
}

TEST_CASE("one-two 3/2-spanners keep all 1-edges and diameter at most 3") {
  oracle::Rng rng(15);
  for (int round = 0; round < 6; ++round) {
    HostGraph h = oracle::random_one_two_host(rng, 5);
    EdgeSet spanner = min_weight_spanner(h, Num::ratio(3, 2), Num(1), 5);
    std::set<std::pair<int, int>> kept(spanner.edges.begin(), spanner.edges.end());
    StrategyProfile s(5);
    for (auto [u, v] : spanner.edges) s.set(u, v, true);
    Network g(h, s);
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) {
        if (h.weight(u, v) == Num(1)) CHECK(kept.count({u, v}) > 0);
        CHECK(g.distance(u, v) <= Num(3));
      }
  }
}

TEST_CASE("optimum_tree returns the defining edges") {
  InstanceBundle star = tree_star_family(5, Num(2));
  EdgeSet opt = optimum_tree(star.host, Num(2));
  CHECK(opt.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(opt.social_cost == Num(40));

  std::vector<TreeEdge> path{{0, 1, Num(1)}, {1, 2, Num(1)}};
  HostGraph h = HostGraph::from_tree(3, path);
  CHECK(optimum_tree(h, Num(1)).edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  oracle::Rng rng(1);
  CHECK_THROWS_AS(optimum_tree(oracle::random_one_two_host(rng, 3), Num(1)), InputError);
}

TEST_CASE("minimum-weight spanners") {
  SUBCASE("3/2-spanner of the one-two triangle keeps the 1-edges") {
    HostGraph h = one_two_triangle(1, 1, 2);
    EdgeSet spanner = min_weight_spanner(h, Num::ratio(3, 2), Num(1));
    CHECK(spanner.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  }
  SUBCASE("unbounded stretch yields a minimum spanning tree") {
    oracle::Rng rng(19);
    for (int round = 0; round < 5; ++round) {
      HostGraph h = oracle::random_metric_host(rng, 5);
      EdgeSet spanner = min_weight_spanner(h, Num::infinity(), Num(1));
      CHECK(spanner.total_weight == mst_weight(h));
      CHECK(spanner.edges.size() == 4);
    }
  }
  SUBCASE("stretch 1 on a tree closure is the tree itself") {
    InstanceBundle bundle = tree_star_family(5, Num(2));
    EdgeSet spanner = min_weight_spanner(bundle.host, Num(1), Num(2));
    CHECK(spanner.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(stretch(bundle.host, Network(bundle.host, bundle.profile("OPT"))) == Num(1));
  }
}

TEST_CASE("spanner ownership search") {
  HostGraph h = one_two_triangle(1, 1, 2);
  EdgeSet spanner = min_weight_spanner(h, Num::ratio(3, 2), Num::ratio(3, 4));
  auto owned = spanner_ne_ownership(h, spanner, Num::ratio(3, 4));
  REQUIRE(owned.has_value());
  EquilibriumReport report = certify(h, *owned, Num::ratio(3, 4), Level::NE);
  CHECK(report.ne->stable);
  CHECK_THROWS_AS(spanner_ne_ownership(h, spanner, Num::ratio(1, 4)), InputError);
}

TEST_CASE("the exact optimum is an (alpha/2 + 1)-spanner") {
  oracle::Rng rng(23);
  for (int round = 0; round < 8; ++round) {
    int n = rng.between(3, 5);
    HostGraph h = oracle::random_general_host(rng, n, false);
    for (Num alpha : {Num(1), Num(4)}) {
      EdgeSet opt = optimum_exact(h, alpha);
      StrategyProfile s(n);
      for (auto [u, v] : opt.edges) s.set(u, v, true);
      Num st = stretch(h, Network(h, s));
      CHECK(st <= alpha / Num(2) + Num(1));
    }
  }
}

TEST_CASE("below alpha = 1 every equilibrium carries all 1-edges") {
  oracle::Rng rng(27);
  int equilibria = 0;
  for (int round = 0; round < 6; ++round) {
    HostGraph h = oracle::random_one_two_host(rng, 4);
    for (Num alpha : {Num::ratio(1, 4), Num::ratio(3, 4)}) {
      std::vector<std::pair<int, int>> pairs;
      for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) pairs.emplace_back(u, v);
      for (int code = 0; code < 729; ++code) {
        int c = code;
        StrategyProfile s(4);
        for (size_t i = 0; i < pairs.size(); ++i, c /= 3) {
          int what = c % 3;
          if (what == 1) s.set(pairs[i].first, pairs[i].second, true);
          if (what == 2) s.set(pairs[i].second, pairs[i].first, true);
        }
        if (!is_nash_equilibrium(h, s, alpha)) continue;
        ++equilibria;
        for (auto [u, v] : pairs)
          if (h.weight(u, v) == Num(1)) CHECK((s.owns(u, v) || s.owns(v, u)));
      }
    }
  }
  CHECK(equilibria > 0);
}

TEST_CASE("stable one-two networks sit inside the pruned optimum") {
  // E(NE) subset of E(OPT), missing 1-edges at distance exactly 2 and
  // pruned 2-edges at distance at most 3 (alpha = 3/4 here).
  oracle::Rng rng(29);
  const Num alpha = Num::ratio(3, 4);
  int checked = 0;
  for (int round = 0; round < 40 && checked < 3; ++round) {
    HostGraph h = oracle::random_one_two_host(rng, 4);
    EdgeSet opt = optimum_one_two(h, alpha);
    std::set<std::pair<int, int>> opt_edges(opt.edges.begin(), opt.edges.end());
    // scan all single-owner profiles for equilibria
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) pairs.emplace_back(u, v);
    std::vector<int> state(pairs.size(), 0);
    for (int code = 0; code < 729; ++code) {
      int c = code;
      StrategyProfile s(4);
      for (size_t i = 0; i < pairs.size(); ++i, c /= 3) {
        int what = c % 3;
        if (what == 1) s.set(pairs[i].first, pairs[i].second, true);
        if (what == 2) s.set(pairs[i].second, pairs[i].first, true);
      }
      if (!is_nash_equilibrium(h, s, alpha)) continue;
      ++checked;
      Network g(h, s);
      for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
          bool in_ne = g.has_edge(u, v);
          bool in_opt = opt_edges.count({u, v}) > 0;
          if (in_ne) CHECK(in_opt);
          if (!in_ne && h.weight(u, v) == Num(1)) CHECK(g.distance(u, v) == Num(2));
          if (!in_opt) CHECK(g.distance(u, v) <= Num(3));
        }
    }
  }
  CHECK(checked > 0);
}
