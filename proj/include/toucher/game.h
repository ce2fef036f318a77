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

#ifndef TOUCHER_GAME_H_
#define TOUCHER_GAME_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "toucher/dyadic.h"
#include "toucher/graph.h"

namespace toucher {

enum class Player : std::uint8_t { kToucher, kIsolator };
enum class Owner : std::uint8_t { kFree, kToucher, kIsolator };

constexpr Player opponent(Player p) {
  return p == Player::kToucher ? Player::kIsolator : Player::kToucher;
}
constexpr Owner owner_of(Player p) {
  return p == Player::kToucher ? Owner::kToucher : Owner::kIsolator;
}
constexpr char player_code(Player p) { return p == Player::kToucher ? 'T' : 'I'; }
std::string player_name(Player p);
// Accepts "toucher"/"isolator"/"T"/"I" (case-insensitive).
Player parse_player(std::string_view text);

// Assigns a player to every move index: the prefix first, then strict
// alternation starting from `then_alternating_from`.
struct TurnSchedule {
  std::vector<Player> prefix;
  Player then_alternating_from = Player::kToucher;

  Player player_at(int move_index) const;

  static TurnSchedule standard() { return {}; }
  static TurnSchedule alternating_from(Player first) { return {{}, first}; }

  bool operator==(const TurnSchedule&) const = default;
};

// Rule violations: claiming a claimed edge, an edge id out of range, or
// asking for the mover of a finished game.
class GameError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Per-edge ownership over a borrowed Graph (the graph must outlive the
// state). Values are cheap to copy; apply/undo mutate in place for search.
class GameState {
 public:
  explicit GameState(const Graph& graph, TurnSchedule schedule = TurnSchedule::standard());

  const Graph& graph() const { return *graph_; }
  const TurnSchedule& schedule() const { return schedule_; }

  Owner owner(EdgeId e) const { return owners_.at(e); }
  bool is_free(EdgeId e) const { return owner(e) == Owner::kFree; }
  std::span<const Owner> ownership() const { return owners_; }

  int moves_made() const { return moves_made_; }
  int free_edges() const { return graph_->num_edges() - moves_made_; }
  bool is_terminal() const { return moves_made_ == graph_->num_edges(); }

  Player whose_turn() const;

  // Claims e for whose_turn().
  void apply(EdgeId e);
  GameState after(EdgeId e) const {
    GameState next = *this;
    next.apply(e);
    return next;
  }
  // Reverts the most recent claim of e; e must be owned by the player who
  // made move moves_made()-1.
  void undo(EdgeId e);

  // Incident edge counts.
  int free_degree(VertexId v) const { return free_deg_.at(v); }
  int toucher_degree(VertexId v) const { return toucher_deg_.at(v); }
  bool is_touched(VertexId v) const { return toucher_degree(v) > 0; }
  // All incident edges Isolator-owned (degree-0 vertices qualify).
  bool is_isolated(VertexId v) const { return toucher_degree(v) == 0 && free_degree(v) == 0; }

  // Two bits per edge: bit e = Toucher owns e, bit 32+e = Isolator owns e.
  // Requires at most 32 edges.
  std::uint64_t packed() const;

  bool operator==(const GameState& other) const {
    return graph_ == other.graph_ && owners_ == other.owners_ &&
           moves_made_ == other.moves_made_ && schedule_ == other.schedule_;
  }

 private:
  void check_edge(EdgeId e) const;

  const Graph* graph_;
  TurnSchedule schedule_;
  std::vector<Owner> owners_;
  std::vector<int> free_deg_;
  std::vector<int> toucher_deg_;
  int moves_made_ = 0;
};

GameState apply_move(const GameState& s, EdgeId e);
Player whose_turn(const GameState& s);

// 0 if a Toucher edge touches v, else 2^-k with k the number of free edges
// at v (so 1 once Isolator owns every edge at v, and 1 for degree-0 v).
DyadicValue danger(const GameState& s, VertexId v);
DyadicValue total_danger(const GameState& s);

// Untouched vertices at the end of the game; throws GameError unless the
// state is terminal.
int untouched_count(const GameState& s);
// Vertices already certain to stay untouched (every incident edge owned by
// Isolator). Monotone over a game and equal to untouched_count at the end.
int isolated_so_far(const GameState& s);
// Vertices without a Toucher edge yet; an upper bound on the final count.
int untouched_so_far(const GameState& s);

}  // namespace toucher

#endif  // TOUCHER_GAME_H_
