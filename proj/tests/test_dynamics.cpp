#include <doctest.h>

#include <set>

#include "netgame/dynamics.hpp"
#include "netgame/families.hpp"
#include "oracle.hpp"

using namespace netgame;

TEST_CASE("two agents converge to the single-edge equilibrium") {
  std::vector<Num> w(4, Num(0));
  w[1] = w[2] = Num(3);
  HostGraph h = HostGraph::general(2, w);
  DynamicsConfig config;
  DynamicsTrace trace = run(h, Num(2), StrategyProfile(2), config);
  CHECK(trace.outcome == Outcome::Converged);
  CHECK(trace.steps.size() <= 2);
  REQUIRE(trace.final_profile.has_value());
  CHECK(trace.final_profile->targets() == std::vector<std::vector<int>>{{1}, {}});
  CHECK(is_nash_equilibrium(h, *trace.final_profile, Num(2)));
}

TEST_CASE("a defining tree with single ownership converges immediately") {
  oracle::Rng rng(3);
  HostGraph h = oracle::random_tree_host(rng, 5);
  StrategyProfile s(5);
  for (const TreeEdge& e : *h.defining_tree()) s.set(e.u, e.v, true);
  DynamicsConfig config;
  DynamicsTrace trace = run(h, Num(2), s, config);
  CHECK(trace.outcome == Outcome::Converged);
  CHECK(trace.steps.empty());
  CHECK(*trace.final_profile == s);
}

TEST_CASE("every outcome on random metric hosts is certifiable") {
  oracle::Rng rng(7);
  for (int round = 0; round < 10; ++round) {
    HostGraph h = oracle::random_metric_host(rng, 5);
    StrategyProfile init = oracle::random_profile(rng, 5);
    DynamicsConfig config;
    config.scheduler = SchedulerKind::Random;
    config.seed = rng.eng();
    config.max_steps = 200;
    Num alpha = Num::ratio(rng.between(1, 4), 2);
    DynamicsTrace trace = run(h, alpha, init, config);
    if (trace.outcome == Outcome::Converged) {
      CHECK(is_nash_equilibrium(h, *trace.final_profile, alpha));
    } else if (trace.outcome == Outcome::Cycle) {
      CycleVerdict verdict = verify_cycle(h, alpha, *trace.cycle, config.rule);
      CHECK(verdict.accepted);
    }
  }
}

TEST_CASE("greedy-single convergence lands on greedy-stable profiles") {
  oracle::Rng rng(11);
  for (int round = 0; round < 6; ++round) {
    HostGraph h = oracle::random_metric_host(rng, 5);
    DynamicsConfig config;
    config.rule = MoveRule::GreedySingle;
    config.max_steps = 400;
    Num alpha = Num(1);
    DynamicsTrace trace = run(h, alpha, oracle::random_connected_profile(rng, 5), config);
    if (trace.outcome != Outcome::Converged) continue;
    for (int u = 0; u < 5; ++u)
      CHECK(improving_single_moves(h, *trace.final_profile, u, alpha).empty());
  }
}

TEST_CASE("verify_cycle rejects broken certificates") {
  std::vector<Num> w(4, Num(0));
  w[1] = w[2] = Num(3);
  HostGraph h = HostGraph::general(2, w);

  SUBCASE("a non-closing sequence is rejected") {
    CycleCertificate cert;
    StrategyProfile a(2);
    StrategyProfile b(2);
    b.set(0, 1, true);
    cert.steps.push_back({a, 0, {1}});
    cert.steps.push_back({b, 1, {0}});  // ends at a different profile
    CycleVerdict verdict = verify_cycle(h, Num(2), cert, MoveRule::GreedySingle);
    CHECK_FALSE(verdict.accepted);
  }
  SUBCASE("a single step is rejected") {
    CycleCertificate cert;
    cert.steps.push_back({StrategyProfile(2), 0, {1}});
    CycleVerdict verdict = verify_cycle(h, Num(2), cert, MoveRule::GreedySingle);
    CHECK_FALSE(verdict.accepted);
    CHECK(verdict.reason == "a cycle needs at least 2 steps");
  }
  SUBCASE("a non-improving step is rejected at its index") {
    CycleCertificate cert;
    StrategyProfile a(2);
    a.set(0, 1, true);
    StrategyProfile b(2);
    b.set(0, 1, true);
    b.set(1, 0, true);
    cert.steps.push_back({a, 1, {0}});  // buying the duplicate makes agent 1 worse
    cert.steps.push_back({b, 1, {}});
    CycleVerdict verdict = verify_cycle(h, Num(2), cert, MoveRule::GreedySingle);
    CHECK_FALSE(verdict.accepted);
    CHECK(verdict.failing_step == 0);
  }
}

TEST_CASE("cycle search with a one-step budget finds nothing") {
  HostGraph h = brc_points();
  auto found = cycle_search(h, {Num(1)}, 1, 5, 42);
  CHECK(found.empty());
}

TEST_CASE("cycle search finds a best-response cycle on the 10-point host") {
  HostGraph h = brc_points();
  auto found = cycle_search(h, {Num::ratio(49, 10)}, 8, 25, 2);
  REQUIRE_FALSE(found.empty());
  for (const FoundCycle& fc : found) {
    CHECK(fc.certificate.steps.size() >= 2);
    CHECK(fc.certificate.steps.size() <= 8);
    CycleVerdict verdict = verify_cycle(h, fc.alpha, fc.certificate, MoveRule::ExactBestResponse);
    CHECK(verdict.accepted);
    // a cycle needs at least two distinct movers
    std::set<int> movers;
    for (const CycleStep& s : fc.certificate.steps) movers.insert(s.mover);
    CHECK(movers.size() >= 2);
    // replay each step against the path-enumeration oracle
    for (size_t i = 0; i < fc.certificate.steps.size(); ++i) {
      const CycleStep& step = fc.certificate.steps[i];
      Num before = oracle::naive_agent_cost(h, step.before, step.mover, fc.alpha);
      StrategyProfile next = step.before;
      std::uint64_t mask = 0;
      for (int v : step.new_strategy) mask |= std::uint64_t{1} << v;
      next.set_mask(step.mover, mask);
      Num after = oracle::naive_agent_cost(h, next, step.mover, fc.alpha);
      CHECK(improves(before, after, 0.0));
      const CycleStep& wrap =
          fc.certificate.steps[(i + 1) % fc.certificate.steps.size()];
      CHECK(next == wrap.before);
    }
  }
}

TEST_CASE("tree-star instances show no short cycles") {
  InstanceBundle bundle = tree_star_family(5, Num(2));
  auto found = cycle_search(bundle.host, {Num(2)}, 6, 5, 7);
  CHECK(found.empty());
}

TEST_CASE("identical seeds replay identical traces") {
  HostGraph h = brc_points();
  DynamicsConfig config;
  config.scheduler = SchedulerKind::Random;
  config.seed = 99;
  config.max_steps = 6;
  StrategyProfile init(10);
  for (int v = 1; v < 10; ++v) init.set(0, v, true);
  DynamicsTrace a = run(h, Num(1), init, config);
  DynamicsTrace b = run(h, Num(1), init, config);
  REQUIRE(a.steps.size() == b.steps.size());
  CHECK(a.outcome == b.outcome);
  for (size_t i = 0; i < a.steps.size(); ++i) {
    CHECK(a.steps[i].agent == b.steps[i].agent);
    CHECK(a.steps[i].after == b.steps[i].after);
  }
}

TEST_CASE("the step budget is reported as exhausted") {
  std::vector<Num> w(9, Num(0));
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (u != v) w[static_cast<size_t>(u) * 3 + v] = Num(1);
  HostGraph h = HostGraph::general(3, w);
  DynamicsConfig config;
  config.max_steps = 1;
  DynamicsTrace trace = run(h, Num(1), StrategyProfile(3), config);
  CHECK(trace.outcome == Outcome::BudgetExhausted);
  CHECK(trace.steps.size() == 1);
}

TEST_CASE("traces only record strictly improving moves") {
  oracle::Rng rng(13);
  HostGraph h = oracle::random_metric_host(rng, 5);
  DynamicsConfig config;
  config.rule = MoveRule::GreedySingle;
  config.max_steps = 100;
  DynamicsTrace trace = run(h, Num(1), oracle::random_profile(rng, 5), config);
  StrategyProfile current = trace.initial;
  for (const TraceStep& step : trace.steps) {
    Num before = agent_cost(h, current, step.agent, Num(1)).total;
    StrategyProfile next = current;
    apply_move(next, step.move);
    CHECK(next == step.after);
    Num after = agent_cost(h, next, step.agent, Num(1)).total;
    CHECK(improves(before, after, 0.0));
    current = next;
  }
}
