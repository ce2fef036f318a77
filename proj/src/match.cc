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

#include "toucher/match.h"

#include <sstream>

namespace toucher {

StrategyError::StrategyError(const std::string& strategy, int ply, EdgeId edge)
    : std::runtime_error("strategy '" + strategy + "' returned illegal edge " +
                         std::to_string(edge) + " at ply " + std::to_string(ply)),
      ply_(ply),
      edge_(edge) {}

MatchResult play_match(const Graph& g, const TurnSchedule& schedule, Strategy& toucher,
                       Strategy& isolator) {
  if (toucher.side() != Player::kToucher || isolator.side() != Player::kIsolator) {
    throw std::invalid_argument("play_match: strategies are on the wrong sides");
  }
  GameState state(g, schedule);
  toucher.reset(state);
  isolator.reset(state);
  std::vector<MoveRecord> log;
  log.reserve(g.num_edges());
  while (!state.is_terminal()) {
    Player mover = state.whose_turn();
    Strategy& strategy = mover == Player::kToucher ? toucher : isolator;
    EdgeId e = strategy.choose(state);
    int ply = state.moves_made();
    if (e < 0 || e >= g.num_edges() || !state.is_free(e)) {
      throw StrategyError(strategy.name(), ply, e);
    }
    state.apply(e);
    const Edge& ed = g.edge(e);
    log.push_back({ply, mover, e, ed.u, ed.v});
    toucher.observe(state, e, mover);
    isolator.observe(state, e, mover);
  }
  int untouched = untouched_count(state);
  return {std::move(state), untouched, std::move(log)};
}

std::string format_move_log(const std::vector<MoveRecord>& log) {
  std::ostringstream out;
  for (const MoveRecord& r : log) {
    out << r.ply << ' ' << player_code(r.player) << ' ' << r.edge << ' ' << r.u << ' ' << r.v
        << '\n';
  }
  return out.str();
}

std::vector<MoveRecord> parse_move_log(std::string_view text) {
  std::vector<MoveRecord> log;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    MoveRecord r;
    std::string who;
    std::string extra;
    if (!(fields >> r.ply >> who >> r.edge >> r.u >> r.v) || (fields >> extra) ||
        (who != "T" && who != "I")) {
      throw ParseError(ParseError::Kind::kMalformedEdge, line_no,
                       "expected '<ply> <T|I> <edge> <u> <v>'");
    }
    r.player = who == "T" ? Player::kToucher : Player::kIsolator;
    log.push_back(r);
  }
  return log;
}

GameState replay(const Graph& g, const TurnSchedule& schedule,
                 const std::vector<MoveRecord>& log) {
  GameState state(g, schedule);
  for (const MoveRecord& r : log) {
    if (r.ply != state.moves_made()) {
      throw GameError("replay: expected ply " + std::to_string(state.moves_made()) + ", got " +
                      std::to_string(r.ply));
    }
    if (state.whose_turn() != r.player) {
      throw GameError("replay: ply " + std::to_string(r.ply) + " belongs to " +
                      player_name(state.whose_turn()));
    }
    state.apply(r.edge);
    const Edge& ed = g.edge(r.edge);
    bool same = (ed.u == r.u && ed.v == r.v) || (ed.u == r.v && ed.v == r.u);
    if (!same) {
      throw GameError("replay: endpoints of edge " + std::to_string(r.edge) +
                      " do not match the graph");
    }
  }
  return state;
}

}  // namespace toucher
