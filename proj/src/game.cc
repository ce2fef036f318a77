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

#include "toucher/game.h"

#include <algorithm>
#include <cctype>

namespace toucher {

std::string player_name(Player p) { return p == Player::kToucher ? "toucher" : "isolator"; }

Player parse_player(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "toucher" || lower == "t") return Player::kToucher;
  if (lower == "isolator" || lower == "i") return Player::kIsolator;
  throw std::invalid_argument("unknown player '" + std::string(text) + "'");
}

Player TurnSchedule::player_at(int move_index) const {
  if (move_index < 0) throw std::out_of_range("negative move index");
  if (move_index < static_cast<int>(prefix.size())) return prefix[move_index];
  int k = move_index - static_cast<int>(prefix.size());
  return k % 2 == 0 ? then_alternating_from : opponent(then_alternating_from);
}

GameState::GameState(const Graph& graph, TurnSchedule schedule)
    : graph_(&graph),
      schedule_(std::move(schedule)),
      owners_(graph.num_edges(), Owner::kFree),
      free_deg_(graph.num_vertices()),
      toucher_deg_(graph.num_vertices(), 0) {
  for (VertexId v = 0; v < graph.num_vertices(); ++v) free_deg_[v] = graph.degree(v);
}

Player GameState::whose_turn() const {
  if (is_terminal()) throw GameError("whose_turn: the game is over");
  return schedule_.player_at(moves_made_);
}

void GameState::check_edge(EdgeId e) const {
  if (e < 0 || e >= graph_->num_edges()) {
    throw GameError("edge id " + std::to_string(e) + " out of range");
  }
}

void GameState::apply(EdgeId e) {
  check_edge(e);
  if (owners_[e] != Owner::kFree) {
    throw GameError("edge " + std::to_string(e) + " is already claimed");
  }
  Player p = whose_turn();
  owners_[e] = owner_of(p);
  const Edge& ed = graph_->edge(e);
  --free_deg_[ed.u];
  --free_deg_[ed.v];
  if (p == Player::kToucher) {
    ++toucher_deg_[ed.u];
    ++toucher_deg_[ed.v];
  }
  ++moves_made_;
}

void GameState::undo(EdgeId e) {
  check_edge(e);
  if (moves_made_ == 0) throw GameError("undo: no moves to revert");
  Player p = schedule_.player_at(moves_made_ - 1);
  if (owners_[e] != owner_of(p)) {
    throw GameError("undo: edge " + std::to_string(e) + " was not claimed by the last mover");
  }
  owners_[e] = Owner::kFree;
  const Edge& ed = graph_->edge(e);
  ++free_deg_[ed.u];
  ++free_deg_[ed.v];
  if (p == Player::kToucher) {
    --toucher_deg_[ed.u];
    --toucher_deg_[ed.v];
  }
  --moves_made_;
}

std::uint64_t GameState::packed() const {
  if (graph_->num_edges() > 32) throw GameError("packed(): more than 32 edges");
  std::uint64_t key = 0;
  for (EdgeId e = 0; e < graph_->num_edges(); ++e) {
    if (owners_[e] == Owner::kToucher) key |= std::uint64_t{1} << e;
    if (owners_[e] == Owner::kIsolator) key |= std::uint64_t{1} << (32 + e);
  }
  return key;
}

GameState apply_move(const GameState& s, EdgeId e) { return s.after(e); }

Player whose_turn(const GameState& s) { return s.whose_turn(); }

DyadicValue danger(const GameState& s, VertexId v) {
  if (v < 0 || v >= s.graph().num_vertices()) {
    throw GameError("vertex id " + std::to_string(v) + " out of range");
  }
  if (s.is_touched(v)) return DyadicValue(0);
  return DyadicValue::pow2_neg(s.free_degree(v));
}

DyadicValue total_danger(const GameState& s) {
  DyadicValue sum(0);
  for (VertexId v = 0; v < s.graph().num_vertices(); ++v) sum += danger(s, v);
  return sum;
}

int untouched_count(const GameState& s) {
  if (!s.is_terminal()) throw GameError("untouched_count: the game is not over");
  return untouched_so_far(s);
}

int isolated_so_far(const GameState& s) {
  int count = 0;
  for (VertexId v = 0; v < s.graph().num_vertices(); ++v) count += s.is_isolated(v) ? 1 : 0;
  return count;
}

int untouched_so_far(const GameState& s) {
  int count = 0;
  for (VertexId v = 0; v < s.graph().num_vertices(); ++v) count += s.is_touched(v) ? 0 : 1;
  return count;
}

}  // namespace toucher
