#pragma once

// Sequential improving-move dynamics with cycle detection. A run applies
// moves under a rule (exact best response, or best single improving move)
// to scheduled agents until a full pass makes no move (converged), a
// previously seen strategy vector recurs (cycle), or the step budget runs
// out. Cycle certificates are independently re-checkable via verify_cycle.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netgame/equilibria.hpp"

namespace netgame {

enum class MoveRule { ExactBestResponse, GreedySingle };
enum class SchedulerKind { RoundRobin, Random };

std::string move_rule_name(MoveRule r);
std::string scheduler_name(SchedulerKind s);

struct DynamicsConfig {
  MoveRule rule = MoveRule::ExactBestResponse;
  SchedulerKind scheduler = SchedulerKind::RoundRobin;
  std::uint64_t seed = 0;
  int max_steps = 1000;
  int br_cap = 20;
};

struct TraceStep {
  int agent;
  Move move;
  StrategyProfile after;
};

struct CycleStep {
  StrategyProfile before;
  int mover;
  std::vector<int> new_strategy;  // sorted
};

struct CycleCertificate {
  std::vector<CycleStep> steps;  // applying all steps returns to steps[0].before
};

enum class Outcome { Converged, Cycle, BudgetExhausted };

std::string outcome_name(Outcome o);

struct DynamicsTrace {
  StrategyProfile initial;
  std::vector<TraceStep> steps;
  Outcome outcome = Outcome::BudgetExhausted;
  std::optional<StrategyProfile> final_profile;  // converged only
  std::optional<CycleCertificate> cycle;         // cycle only
  DynamicsConfig config;
};

DynamicsTrace run(const HostGraph& host, const Num& alpha, const StrategyProfile& init,
                  const DynamicsConfig& config);

struct CycleVerdict {
  bool accepted = false;
  int failing_step = -1;
  std::string reason;
};

// Accepts iff every step strictly improves its mover (beyond epsilon in
// float mode), best-response steps are cost-minimal, and the profile
// sequence closes exactly on the first profile.
CycleVerdict verify_cycle(const HostGraph& host, const Num& alpha, const CycleCertificate& cert,
                          MoveRule rule, int br_cap = 20);

struct FoundCycle {
  Num alpha;
  CycleCertificate certificate;
};

// Random-restart exploration: runs the dynamics from random initial profiles
// for each alpha in the grid and collects every verified cycle of length at
// most max_len, deduplicated up to rotation. Each restart walks an internal
// budget of improving moves; max_len caps the certified cycle itself.
std::vector<FoundCycle> cycle_search(const HostGraph& host, const std::vector<Num>& alpha_grid,
                                     int max_len, int restarts, std::uint64_t seed,
                                     MoveRule rule = MoveRule::ExactBestResponse);

}  // namespace netgame
