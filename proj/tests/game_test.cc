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

#include <doctest.h>

#include <random>

#include "toucher/corpus.h"
#include "toucher/game.h"
#include "toucher/generators.h"
#include "toucher/match.h"
#include "toucher/strategies.h"

using namespace toucher;

TEST_CASE("turn schedule") {
  const TurnSchedule standard = TurnSchedule::standard();
  CHECK(standard.player_at(0) == Player::kToucher);
  CHECK(standard.player_at(1) == Player::kIsolator);
  const TurnSchedule custom{{Player::kIsolator, Player::kIsolator}, Player::kToucher};
  CHECK(custom.player_at(1) == Player::kIsolator);
  CHECK(custom.player_at(2) == Player::kToucher);
  CHECK(custom.player_at(3) == Player::kIsolator);
  CHECK_THROWS_AS(standard.player_at(-1), std::out_of_range);
  CHECK(parse_player("I") == Player::kIsolator);
  CHECK(parse_player("Toucher") == Player::kToucher);
  CHECK_THROWS_AS(parse_player("nobody"), std::invalid_argument);
}

TEST_CASE("apply, undo and rule violations") {
  const Graph g = path_graph(3);
  GameState s(g);
  s.apply(0);
  CHECK(s.owner(0) == Owner::kToucher);
  CHECK(s.whose_turn() == Player::kIsolator);
  CHECK_THROWS_AS(s.apply(0), GameError);
  CHECK_THROWS_AS(s.apply(5), GameError);
  s.apply(1);
  CHECK(s.is_terminal());
  CHECK_THROWS_AS(s.whose_turn(), GameError);
  CHECK(untouched_count(s) == 1);  // Isolator's edge leaves vertex 2 alone
  CHECK_THROWS_AS(s.undo(0), GameError);  // edge 0 is not the last claim
  s.undo(1);
  CHECK(s.is_free(1));
  CHECK(s.moves_made() == 1);
  CHECK_THROWS_AS(untouched_count(s), GameError);
}

TEST_CASE("danger values") {
  const Graph g = star_graph(4);  // centre 0 of degree 3
  GameState s(g);
  CHECK(danger(s, 0) == DyadicValue::pow2_neg(3));
  CHECK(danger(s, 1) == DyadicValue::pow2_neg(1));
  CHECK(total_danger(s) == DyadicValue(13, 3));
  s.apply(0);  // Toucher touches 0 and 1
  CHECK(danger(s, 0) == DyadicValue(0));
  CHECK(danger(s, 1) == DyadicValue(0));
  s.apply(1);  // Isolator isolates 2
  CHECK(danger(s, 2) == DyadicValue(1));
  CHECK(isolated_so_far(s) == 1);
  CHECK(untouched_so_far(s) == 2);
  CHECK_THROWS_AS(danger(s, 9), GameError);
  // A degree-0 vertex is untouched from the start.
  const Graph lonely(2, {});
  CHECK(total_danger(GameState(lonely)) == DyadicValue(2));
}

TEST_CASE("packed keys distinguish owners") {
  const Graph g = cycle_graph(4);
  GameState a(g);
  a.apply(0);
  a.apply(1);
  GameState b(g);
  b.apply(1);
  b.apply(0);
  CHECK(a.packed() != b.packed());
  CHECK(a.packed() == ((std::uint64_t{1} << 0) | (std::uint64_t{1} << 33)));
  CHECK_THROWS_AS(GameState(gadget24()).packed(), GameError);
}

TEST_CASE("property: danger bookkeeping over random games") {
  std::mt19937_64 rng(2026);
  const auto corpus = default_corpus();
  for (int trial = 0; trial < 300; ++trial) {
    const Graph& g = corpus[uniform_below(rng, corpus.size())].graph;
    GameState s(g);
    int isolated = 0, untouched = g.num_vertices();
    while (!s.is_terminal()) {
      std::vector<EdgeId> free_edges;
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (s.is_free(e)) free_edges.push_back(e);
      }
      const EdgeId e = free_edges[uniform_below(rng, free_edges.size())];
      const Player mover = s.whose_turn();
      const DyadicValue before = total_danger(s);
      const DyadicValue endpoints = danger(s, g.edge(e).u) + danger(s, g.edge(e).v);
      s.apply(e);
      const DyadicValue after = total_danger(s);
      CHECK(after == (mover == Player::kToucher ? before - endpoints : before + endpoints));
      // Isolated counts only grow, untouched counts only shrink.
      CHECK(isolated_so_far(s) >= isolated);
      CHECK(untouched_so_far(s) <= untouched);
      isolated = isolated_so_far(s);
      untouched = untouched_so_far(s);
      CHECK(isolated <= untouched);
    }
    CHECK(total_danger(s) == DyadicValue(untouched_count(s)));
    CHECK(isolated_so_far(s) == untouched_count(s));
  }
}

TEST_CASE("move log round-trip and replay") {
  const Graph g = cycle_graph(6);
  auto t = max_danger_toucher();
  auto i = max_danger_isolator();
  const MatchResult m = play_match(g, TurnSchedule::standard(), *t, *i);
  REQUIRE(m.log.size() == 6);
  CHECK(m.log.front().ply == 0);
  const std::string text = format_move_log(m.log);
  const auto parsed = parse_move_log("# comment\n\n" + text);
  CHECK(parsed == m.log);
  const GameState replayed = replay(g, TurnSchedule::standard(), parsed);
  CHECK(replayed == m.final_state);
  CHECK(untouched_count(replayed) == m.untouched);

  auto wrong_player = parsed;
  wrong_player[1].player = Player::kToucher;
  CHECK_THROWS_AS(replay(g, TurnSchedule::standard(), wrong_player), GameError);
  auto wrong_endpoint = parsed;
  wrong_endpoint[2].u = (wrong_endpoint[2].u + 3) % 6;
  CHECK_THROWS_AS(replay(g, TurnSchedule::standard(), wrong_endpoint), GameError);
  auto gap = parsed;
  gap[3].ply = 7;
  CHECK_THROWS_AS(replay(g, TurnSchedule::standard(), gap), GameError);
  CHECK_THROWS_AS(parse_move_log("0 T zero 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_move_log("0 X 0 0 1\n"), ParseError);
}

namespace {

// Always claims edge 0, legal or not.
class Stubborn : public StatelessStrategy {
 public:
  explicit Stubborn(Player side) : side_(side) {}
  std::string name() const override { return "stubborn"; }
  Player side() const override { return side_; }
  EdgeId choose(const GameState&) const override { return 0; }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<Stubborn>(*this); }

 private:
  Player side_;
};

}  // namespace

TEST_CASE("illegal strategy moves are reported with the ply") {
  const Graph g = path_graph(4);
  Stubborn t(Player::kToucher);
  auto i = max_danger_isolator();
  try {
    play_match(g, TurnSchedule::standard(), t, *i);
    FAIL("expected StrategyError");
  } catch (const StrategyError& e) {
    CHECK(e.ply() == 2);
    CHECK(e.edge() == 0);
  }
  Stubborn wrong_side(Player::kIsolator);
  CHECK_THROWS_AS(play_match(g, TurnSchedule::standard(), wrong_side, *i), std::invalid_argument);
}
