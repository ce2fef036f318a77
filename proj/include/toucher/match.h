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

#ifndef TOUCHER_MATCH_H_
#define TOUCHER_MATCH_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toucher/game.h"
#include "toucher/strategy.h"

namespace toucher {

// One line of a move log: "<ply> <T|I> <edge id> <u> <v>", ply 0-based.
struct MoveRecord {
  int ply = 0;
  Player player = Player::kToucher;
  EdgeId edge = kNoEdge;
  VertexId u = 0;
  VertexId v = 0;

  bool operator==(const MoveRecord&) const = default;
};

struct MatchResult {
  GameState final_state;
  int untouched = 0;
  std::vector<MoveRecord> log;
};

// A strategy returned an edge that is out of range or already claimed.
class StrategyError : public std::runtime_error {
 public:
  StrategyError(const std::string& strategy, int ply, EdgeId edge);

  int ply() const { return ply_; }
  EdgeId edge() const { return edge_; }

 private:
  int ply_;
  EdgeId edge_;
};

// Resets both strategies, then queries the scheduled player's strategy each
// turn until every edge is claimed. Both strategies observe every move.
MatchResult play_match(const Graph& g, const TurnSchedule& schedule, Strategy& toucher,
                       Strategy& isolator);

std::string format_move_log(const std::vector<MoveRecord>& log);
// Inverse of format_move_log; blank lines and '#' comments are ignored.
// Throws ParseError on malformed lines.
std::vector<MoveRecord> parse_move_log(std::string_view text);

// Replays a log on g, checking that plies are consecutive, that the player
// matches the schedule and that endpoints match the graph. Throws GameError
// on any mismatch.
GameState replay(const Graph& g, const TurnSchedule& schedule,
                 const std::vector<MoveRecord>& log);

}  // namespace toucher

#endif  // TOUCHER_MATCH_H_
