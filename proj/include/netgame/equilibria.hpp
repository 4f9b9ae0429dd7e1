#pragma once

// Improving moves, exact and greedy best responses, and equilibrium
// certification. Three nested stability levels are checked:
//   AE: no improving single-edge purchase,
//   GE: no improving single-edge purchase, deletion or swap,
//   NE: no improving strategy change at all (exhaustive, cap-gated).
// beta factors measure how far an agent can improve under the respective
// move set; stable profiles give exactly 1.

#include <optional>
#include <utility>
#include <vector>

#include "netgame/game.hpp"

namespace netgame {

enum class MoveKind { Add, Delete, Swap, FullStrategy };

struct Move {
  int agent = -1;
  MoveKind kind = MoveKind::Add;
  int target = -1;    // Add / Delete
  int swap_out = -1;  // Swap: owned edge removed
  int swap_in = -1;   // Swap: edge bought instead
  std::vector<int> new_strategy;  // FullStrategy only, sorted
  Num cost_before, cost_after;
  Num delta;  // cost_before - cost_after (+infinity if reconnecting)
};

void apply_move(StrategyProfile& profile, const Move& move);

// All strictly improving adds, deletes and swaps for one agent, in a fixed
// deterministic order (adds by target, deletes by target, swaps by pair).
// Moves that duplicate an edge owned by the other endpoint are skipped: they
// are never strictly improving.
std::vector<Move> improving_single_moves(const HostGraph& host, const StrategyProfile& profile,
                                         int agent, const Num& alpha);

struct BestResponse {
  std::vector<int> strategy;  // sorted targets
  Num cost;
};

// Exhaustive best response over all 2^(n-1) strategies. Ties are broken by
// fewest edges, then lexicographically smallest target set.
BestResponse best_response_exact(const HostGraph& host, const StrategyProfile& profile, int agent,
                                 const Num& alpha, int cap = 20);

// Applies the best single improving move (largest gain; ties by move kind
// add < delete < swap, then lowest target index) until none exists.
std::vector<int> greedy_stable_response(const HostGraph& host, const StrategyProfile& profile,
                                        int agent, const Num& alpha);

enum class Level { AE, GE, NE };

struct LevelVerdict {
  bool stable = false;
  std::optional<Move> witness;  // an improving move when unstable
};

struct EquilibriumReport {
  LevelVerdict ae;
  std::optional<LevelVerdict> ge;  // filled at GE and NE levels
  std::optional<LevelVerdict> ne;  // filled at NE level only
  std::optional<Num> beta_ge;
  std::optional<Num> beta_ne;
  bool ne_certified_exactly = false;
  double epsilon_used = 0.0;
};

EquilibriumReport certify(const HostGraph& host, const StrategyProfile& profile, const Num& alpha,
                          Level level, int cap = 20);

// (beta_ge, beta_ne) for the profile; both are 1 on stable profiles.
std::pair<Num, Num> approx_factors(const HostGraph& host, const StrategyProfile& profile,
                                   const Num& alpha, int cap = 20);

// Fast NE predicate used by enumeration-style callers.
bool is_nash_equilibrium(const HostGraph& host, const StrategyProfile& profile, const Num& alpha,
                         int cap = 20);

// Effective comparison tolerance: host epsilon in float mode, exact otherwise.
double effective_epsilon(const HostGraph& host);

// Lexicographic order on target sets encoded as bitmasks ({0,3} < {1}).
bool lex_mask_less(std::uint64_t a, std::uint64_t b);

}  // namespace netgame
