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

#include <algorithm>
#include <random>
#include <set>

#include "toucher/corpus.h"
#include "toucher/generators.h"
#include "toucher/match.h"
#include "toucher/strategies.h"

using namespace toucher;

TEST_CASE("max_danger picks the largest endpoint-danger sum") {
  // star(4) plus a pendant: the edge at the two leaves of a path is most
  // dangerous.
  const Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  GameState s(g);
  // Danger sums: {0,1}: 1/8+1/2, {0,2}: same, {0,3}: 1/8+1/4, {3,4}: 1/4+1/2.
  CHECK(max_danger_toucher()->choose(s) == 3);
  s.apply(3);
  CHECK(max_danger_isolator()->choose(s) == 0);  // tie between 0 and 1 -> lowest id
}

TEST_CASE("property: max-danger choice is invariant under scaling the dangers") {
  std::mt19937_64 rng(5);
  for (const auto& entry : default_corpus()) {
    GameState s(entry.graph);
    std::vector<DyadicValue> dangers;
    for (VertexId v = 0; v < entry.graph.num_vertices(); ++v) dangers.push_back(danger(s, v));
    const EdgeId base = select_max_danger_edge(s, dangers);
    for (int k : {1, 3, 7, -2}) {
      std::vector<DyadicValue> scaled;
      for (const auto& d : dangers) scaled.push_back(d.scaled(k));
      CHECK(select_max_danger_edge(s, scaled) == base);
    }
    CHECK(base == max_danger_edge(s));
  }
}

TEST_CASE("candidate restriction") {
  const Graph g = path_graph(5);
  GameState s(g);
  const std::vector<EdgeId> middle = {1, 2};
  CHECK(max_danger_edge(s, middle) == 1);
  s.apply(1);
  s.apply(2);
  CHECK(max_danger_edge(s, middle) == kNoEdge);
  CHECK(lowest_free_among(s, middle) == kNoEdge);
  CHECK(lowest_free_edge(s) == 0);
}

TEST_CASE("property: pairing plans are disjoint and cover high-degree vertices") {
  for (const auto& entry : default_corpus()) {
    const Graph& g = entry.graph;
    for (PairingVariant variant : {PairingVariant::kIncoming, PairingVariant::kOutgoing}) {
      const PairingPlan plan = build_pairing_plan(g, variant);
      std::set<EdgeId> used;
      for (const auto& [a, b] : plan.pairs) {
        CHECK(a != b);
        CHECK(used.insert(a).second);
        CHECK(used.insert(b).second);
        CHECK(plan.partner[a] == b);
        CHECK(plan.partner[b] == a);
      }
      if (plan.forced_first != kNoEdge) CHECK(used.count(plan.forced_first) == 0);
      const std::set<VertexId> dedicated(plan.dedicated.begin(), plan.dedicated.end());
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) >= 4) CHECK(dedicated.count(v) == 1);
      }
      CHECK(pairing_guarantee(g, plan) <= g.num_vertices());
    }
  }
}

TEST_CASE("pairing answers a threatened pair") {
  const Graph g = circulant_graph(5, {1, 2});
  auto toucher = pairing_toucher(g);
  const PairingPlan plan = build_pairing_plan(g);
  REQUIRE_FALSE(plan.pairs.empty());
  const auto [a, b] = plan.pairs.front();
  GameState s(g);
  s.apply(toucher->choose(s));
  if (s.is_free(a) && s.is_free(b)) {
    s.apply(a);
    CHECK(toucher->choose(s) == b);
  }
}

TEST_CASE("registry") {
  const Graph c = cycle_graph(8);
  CHECK(make_strategy("max_danger", Player::kToucher, c)->side() == Player::kToucher);
  CHECK(make_strategy("random(42)", Player::kIsolator, c)->side() == Player::kIsolator);
  CHECK(make_strategy("pairing(out)", Player::kToucher, c)->name() == "pairing(out)");
  CHECK(make_strategy(" cycle_segment ", Player::kIsolator, c)->side() == Player::kIsolator);
  CHECK_THROWS_AS(make_strategy("cycle_segment", Player::kToucher, c), std::invalid_argument);
  CHECK_THROWS_AS(make_strategy("path_segment", Player::kIsolator, c), std::invalid_argument);
  CHECK_THROWS_AS(make_strategy("random", Player::kToucher, c), std::invalid_argument);
  CHECK_THROWS_AS(make_strategy("no_such", Player::kToucher, c), std::invalid_argument);
  CHECK_THROWS_AS(make_strategy("max_danger(1", Player::kToucher, c), std::invalid_argument);
  CHECK_THROWS_AS(make_strategy("k4_components", Player::kToucher, c), std::invalid_argument);
  CHECK_THROWS_AS(make_strategy("c3_components", Player::kToucher, c3_components(2)),
                  std::invalid_argument);
  const StrategySpec spec = parse_strategy_spec("random(7)");
  CHECK(spec.name == "random");
  CHECK(spec.args == std::vector<std::string>{"7"});
  CHECK(strategy_names().size() == 9);
}

TEST_CASE("property: strategies are deterministic and clones agree") {
  const Graph g = cycle_graph(19);
  for (const char* name : {"cycle_segment", "two_regular", "max_danger", "random(3)"}) {
    auto isolator = make_strategy(name, Player::kIsolator, g);
    auto t1 = make_strategy("random(9)", Player::kToucher, g);
    const MatchResult first = play_match(g, TurnSchedule::standard(), *t1, *isolator);
    const MatchResult second = play_match(g, TurnSchedule::standard(), *t1, *isolator);
    CHECK(first.log == second.log);
    // A clone taken mid-game continues identically.
    isolator->reset(GameState(g));
    GameState s(g);
    for (int k = 0; k < 6; ++k) {
      const EdgeId e = s.whose_turn() == Player::kToucher ? t1->choose(s) : isolator->choose(s);
      const Player mover = s.whose_turn();
      s.apply(e);
      isolator->observe(s, e, mover);
    }
    auto copy = isolator->clone();
    CHECK(copy->digest() == isolator->digest());
    CHECK(copy->choose(s) == isolator->choose(s));
  }
}

TEST_CASE("random strategy depends only on seed and history") {
  const Graph g = path_graph(12);
  auto a = random_strategy(Player::kToucher, 17);
  auto b = random_strategy(Player::kToucher, 17);
  auto c = random_strategy(Player::kToucher, 18);
  GameState s(g);
  CHECK(a->choose(s) == b->choose(s));
  std::set<EdgeId> first_moves;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    first_moves.insert(random_strategy(Player::kToucher, seed)->choose(s));
  }
  CHECK(first_moves.size() > 5);
  (void)c;
}

TEST_CASE("component strategies on their families") {
  const Graph k4 = k4_components(2);
  auto t = k4_components_toucher(k4);
  auto i = make_strategy("random(5)", Player::kIsolator, k4);
  CHECK(play_match(k4, TurnSchedule::standard(), *t, *i).untouched == 0);

  const Graph c3 = c3_components(3);
  auto tc = c3_components_toucher(c3);
  auto ic = max_danger_isolator();
  CHECK(play_match(c3, TurnSchedule::standard(), *tc, *ic).untouched <= 1);
}

TEST_CASE("segment strategies reach their guarantees against simple opponents") {
  for (int n = 17; n <= 40; ++n) {
    const Graph g = cycle_graph(n);
    for (const char* toucher : {"max_danger", "pairing", "random(1)", "random(2)"}) {
      auto t = make_strategy(toucher, Player::kToucher, g);
      auto i = cycle_segment_isolator(g);
      const int untouched = play_match(g, TurnSchedule::standard(), *t, *i).untouched;
      CHECK_MESSAGE(untouched >= (3 * (n - 3) + 15) / 16, "cycle ", n, " vs ", toucher);
    }
  }
  for (int n = 2; n <= 40; ++n) {
    const Graph g = path_graph(n);
    for (const char* toucher : {"max_danger", "pairing", "random(1)"}) {
      auto t = make_strategy(toucher, Player::kToucher, g);
      auto i = path_segment_isolator(g);
      const int untouched = play_match(g, TurnSchedule::standard(), *t, *i).untouched;
      CHECK_MESSAGE(untouched >= std::max(0, (3 * (n - 2) + 15) / 16), "path ", n, " vs ",
                    toucher);
    }
  }
}

TEST_CASE("leaf priority takes leaf edges first") {
  // A path's two end edges both have a leaf endpoint; the lone edge of a
  // K2 component has two.
  const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
  GameState s(g);
  s.apply(1);
  CHECK(leaf_priority_isolator(g)->choose(s) == 3);
}
