// Copyright 2026 The Toucher Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOUCHER_SOLVER_H_
#define TOUCHER_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toucher/game.h"
#include "toucher/generators.h"
#include "toucher/strategy.h"

namespace toucher {

// Hard limit imposed by the two-bits-per-edge state key.
inline constexpr int kMaxPackedEdges = 32;
inline constexpr int kDefaultEdgeCeiling = 22;
inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ULL;
// Environment variable overriding the default table memory cap (MiB).
inline constexpr const char* kTableMemoryEnv = "TOUCHER_TABLE_MEMORY_MB";
inline constexpr std::size_t kDefaultTableMemoryMb = 4096;

struct SolverOptions {
  int edge_ceiling = kDefaultEdgeCeiling;
  bool alpha_beta = true;
  bool transposition_table = true;
  // Skip moves on edges whose endpoints are both touched; such a move is
  // never better than claiming a live edge.
  bool prune_dead_edges = true;
  std::uint64_t node_budget = kDefaultNodeBudget;  // best-response search only
  // 0 selects the environment override, else kDefaultTableMemoryMb.
  std::size_t table_memory_mb = 0;
};

struct SolveResult {
  int value = 0;
  // Move for the player to move at the root; absent iff the root is terminal.
  std::optional<EdgeId> best_move;
  // Subgames only: the best root action is a pass.
  bool best_move_is_pass = false;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t table_hits = 0;
  std::chrono::duration<double, std::milli> elapsed{0};
  int ceiling = kDefaultEdgeCeiling;
};

class SolverError : public std::runtime_error {
 public:
  enum class Kind { kCeilingExceeded, kMemoryCap, kNodeBudget, kIllegalStrategyMove, kBadSpec };

  SolverError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// u(G) under `schedule`: Toucher minimises, Isolator maximises the final
// number of untouched vertices.
SolveResult solve_exact(const Graph& g, const TurnSchedule& schedule = TurnSchedule::standard(),
                        const SolverOptions& options = {});
// Value of an arbitrary position (same search, rooted at `state`).
SolveResult solve_position(const GameState& state, const SolverOptions& options = {});

// Unpruned, unmemoised minimax; the reference for cross-checks. Limited to
// 12 edges.
int minimax_reference(const GameState& state);

// Value when `fixed` plays `fixed_side` and the other side searches
// exhaustively. The strategy is cloned and reset; the caller's instance is
// untouched.
SolveResult best_response_value(const Graph& g, const TurnSchedule& schedule, Player fixed_side,
                                const Strategy& fixed, const SolverOptions& options = {});

struct SubgameSpec {
  std::vector<EdgeId> region;
  std::map<EdgeId, Player> preclaimed;
  Player first_mover = Player::kToucher;
  std::set<Player> pass_allowed;
  std::vector<VertexId> objective;
};

// Minimax over the region edges only, with optional passes (never two in a
// row). The payoff is the number of untouched objective vertices once every
// region edge is claimed.
SolveResult solve_subgame(const Graph& g, const SubgameSpec& spec,
                          const SolverOptions& options = {});

struct ValueRow {
  int n = 0;
  int value = 0;
  SolveResult stats;
};
// Exact u for members of `base`'s family, with `n` (or `count`, for the
// component families) taken from `sizes`.
std::vector<ValueRow> value_table(const FamilySpec& base, const std::vector<int>& sizes,
                                  const TurnSchedule& schedule = TurnSchedule::standard(),
                                  const SolverOptions& options = {});

// {"value", "best_move", "nodes", "table_hits", "elapsed_ms", "ceiling"}.
std::string solve_result_json(const SolveResult& result);

}  // namespace toucher

#endif  // TOUCHER_SOLVER_H_
