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

#ifndef TOUCHER_STRATEGY_H_
#define TOUCHER_STRATEGY_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toucher/game.h"

namespace toucher {

// A deterministic move selector for one side of one match.
//
// Protocol: reset() once with the initial state, then observe() after every
// move of either player (including the strategy's own). choose() is only
// called when it is this strategy's turn and must return a free edge. All
// internal state changes happen in reset() and observe(), so two instances
// with equal digest() behave identically from equal game states.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string name() const = 0;
  virtual Player side() const = 0;

  virtual void reset(const GameState& initial) = 0;
  virtual void observe(const GameState& after, EdgeId edge, Player mover) = 0;
  virtual EdgeId choose(const GameState& state) const = 0;

  virtual std::unique_ptr<Strategy> clone() const = 0;

  // Injective encoding of the internal state. Empty for strategies whose
  // choice is a function of the game state alone.
  virtual std::string digest() const { return {}; }
};

// Helper base for strategies whose choice depends only on the game state.
class StatelessStrategy : public Strategy {
 public:
  void reset(const GameState&) override {}
  void observe(const GameState&, EdgeId, Player) override {}
};

// Lowest-id free edge, or kNoEdge when the game is over.
EdgeId lowest_free_edge(const GameState& s);
// Lowest-id free edge among `edges`, or kNoEdge.
EdgeId lowest_free_among(const GameState& s, std::span<const EdgeId> edges);

// Free edge maximising danger(u) + danger(v) for the supplied per-vertex
// dangers, lowest id on ties; restricted to `candidates` when non-empty.
// kNoEdge when no candidate is free.
EdgeId select_max_danger_edge(const GameState& s, std::span<const DyadicValue> vertex_danger,
                              std::span<const EdgeId> candidates = {});
// Same, using danger(s, v).
EdgeId max_danger_edge(const GameState& s, std::span<const EdgeId> candidates = {});

// Parsed "name(arg,...)" strategy reference.
struct StrategySpec {
  std::string name;
  std::vector<std::string> args;
};
StrategySpec parse_strategy_spec(std::string_view text);

// Registry: builds a strategy by name for the given side and graph. Throws
// std::invalid_argument for unknown names, wrong sides or bad arguments.
//
//   max_danger            either side
//   random(seed)          either side
//   pairing[(out)]        Toucher
//   k4_components         Toucher
//   c3_components         Toucher
//   leaf_priority         Isolator
//   cycle_segment         Isolator
//   path_segment          Isolator
//   two_regular           Isolator
std::unique_ptr<Strategy> make_strategy(std::string_view spec, Player side, const Graph& g);
std::vector<std::string> strategy_names();

}  // namespace toucher

#endif  // TOUCHER_STRATEGY_H_
