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

#include <cstdlib>
#include <random>

#include <json.hpp>

#include "toucher/corpus.h"
#include "toucher/generators.h"
#include "toucher/solver.h"
#include "toucher/strategies.h"

using namespace toucher;

namespace {

int u(const Graph& g) { return solve_exact(g).value; }

}  // namespace

TEST_CASE("extremal examples") {
  CHECK(u(cycle_graph(3)) == 0);
  CHECK(u(cycle_graph(4)) == 1);
  CHECK(u(path_graph(2)) == 0);
  CHECK(u(path_graph(3)) == 1);
  CHECK(u(path_graph(6)) == 1);
  CHECK(u(path_graph(7)) == 2);
  CHECK(u(k4_components(1)) == 0);
  for (int n : {3, 5, 7, 9}) CHECK(u(star_graph(n)) == (n - 1) / 2);
  for (int x = 0; x <= 3; ++x) CHECK(u(p3_components_plus_p2(x)) == x);
  CHECK(u(c3_components(3)) == 1);
}

TEST_CASE("frozen exact values") {
  // Computed once by exhaustive search and frozen as regression oracles.
  const std::vector<int> cycles = {0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3};  // n = 3..16
  for (int n = 3; n <= 16; ++n) CHECK_MESSAGE(u(cycle_graph(n)) == cycles[n - 3], "cycle ", n);
  const std::vector<int> paths = {0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3};  // n = 2..16
  for (int n = 2; n <= 16; ++n) CHECK_MESSAGE(u(path_graph(n)) == paths[n - 2], "path ", n);
  CHECK(u(circulant_graph(5, {1, 2})) == 0);
  CHECK(u(circulant_graph(8, {1, 2})) == 0);
  CHECK(u(two_hub_graph()) == 1);
  CHECK(u(k4_components(2)) == 0);
  CHECK(u(c3_components(5)) == 2);
  CHECK(u(c3_components(2)) == 1);
  CHECK(u(k2_components(3)) == 2);
  CHECK(u(k2_components(2)) == 2);
}

TEST_CASE("schedules change the value") {
  // Isolator moving first on a single edge leaves both endpoints untouched.
  const Graph g = path_graph(2);
  CHECK(solve_exact(g, TurnSchedule::alternating_from(Player::kIsolator)).value == 2);
  const TurnSchedule two_isolator_moves{{Player::kIsolator, Player::kIsolator}, Player::kToucher};
  CHECK(solve_exact(path_graph(3), two_isolator_moves).value == 3);
}

TEST_CASE("best move is reported and sound") {
  const Graph g = cycle_graph(8);
  const SolveResult r = solve_exact(g);
  REQUIRE(r.best_move.has_value());
  GameState s(g);
  s.apply(*r.best_move);
  CHECK(solve_position(s).value == r.value);
  const Graph edge = path_graph(2);
  GameState done(edge);
  done.apply(0);
  CHECK_FALSE(solve_position(done).best_move.has_value());
}

TEST_CASE("property: pruning options never change the value") {
  SolverOptions plain;
  plain.alpha_beta = false;
  plain.transposition_table = false;
  plain.prune_dead_edges = false;
  for (const auto& entry : default_corpus()) {
    if (entry.graph.num_edges() > 10) continue;
    const int reference = minimax_reference(GameState(entry.graph));
    CHECK_MESSAGE(solve_exact(entry.graph).value == reference, entry.name);
    CHECK_MESSAGE(solve_exact(entry.graph, TurnSchedule::standard(), plain).value == reference,
                  entry.name);
  }
}

TEST_CASE("property: relabeling edges leaves the value unchanged") {
  std::mt19937_64 rng(99);
  for (const auto& entry : random_connected_corpus(kDefaultCorpusSeed, 15)) {
    const int base = u(entry.graph);
    for (int k = 0; k < 5; ++k) {
      const auto perm = random_permutation(rng, entry.graph.num_edges());
      CHECK(u(permute_edges(entry.graph, perm)) == base);
    }
  }
}

TEST_CASE("property: positions are sandwiched by their static bounds") {
  std::mt19937_64 rng(4);
  const Graph g = random_connected_graph(rng, 8, 11);
  GameState s(g);
  while (!s.is_terminal()) {
    const int v = solve_position(s).value;
    CHECK(isolated_so_far(s) <= v);
    CHECK(v <= untouched_so_far(s));
    std::vector<EdgeId> free_edges;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (s.is_free(e)) free_edges.push_back(e);
    }
    s.apply(free_edges[uniform_below(rng, free_edges.size())]);
  }
}

TEST_CASE("limits") {
  try {
    solve_exact(cycle_graph(23));
    FAIL("expected a ceiling error");
  } catch (const SolverError& e) {
    CHECK(e.kind() == SolverError::Kind::kCeilingExceeded);
  }
  SolverOptions wide;
  wide.edge_ceiling = 100;
  CHECK_THROWS_AS(solve_exact(gadget24(), TurnSchedule::standard(), wide), SolverError);
  CHECK_THROWS_AS(minimax_reference(GameState(cycle_graph(13))), SolverError);

  SolverOptions tiny;
  tiny.table_memory_mb = 1;
  try {
    solve_exact(cycle_graph(20), TurnSchedule::standard(), tiny);
    FAIL("expected a memory-cap error");
  } catch (const SolverError& e) {
    CHECK(e.kind() == SolverError::Kind::kMemoryCap);
  }

  SolverOptions budget;
  budget.node_budget = 100;
  try {
    best_response_value(cycle_graph(12), TurnSchedule::standard(), Player::kIsolator,
                        *max_danger_isolator(), budget);
    FAIL("expected a budget error");
  } catch (const SolverError& e) {
    CHECK(e.kind() == SolverError::Kind::kNodeBudget);
  }
}

TEST_CASE("memory cap from the environment") {
  ::setenv(kTableMemoryEnv, "1", 1);
  CHECK_THROWS_AS(solve_exact(cycle_graph(20)), SolverError);
  ::unsetenv(kTableMemoryEnv);
}

TEST_CASE("best-response sandwich") {
  for (const auto& entry : default_corpus()) {
    if (entry.graph.num_edges() > 12) continue;
    const int exact = u(entry.graph);
    const int fixed_toucher = best_response_value(entry.graph, TurnSchedule::standard(),
                                                  Player::kToucher, *max_danger_toucher())
                                  .value;
    const int fixed_isolator = best_response_value(entry.graph, TurnSchedule::standard(),
                                                   Player::kIsolator, *max_danger_isolator())
                                   .value;
    CHECK_MESSAGE(fixed_toucher >= exact, entry.name);
    CHECK_MESSAGE(fixed_isolator <= exact, entry.name);
  }
}

TEST_CASE("frozen best-response values") {
  auto br = [](const Graph& g, Player side, const Strategy& s) {
    return best_response_value(g, TurnSchedule::standard(), side, s).value;
  };
  const Graph k5 = circulant_graph(5, {1, 2});
  CHECK(br(k5, Player::kToucher, *pairing_toucher(k5)) == 0);
  const Graph p6 = path_graph(6);
  CHECK(br(p6, Player::kIsolator, *max_danger_isolator()) == 1);
  const Graph p7 = path_graph(7);
  CHECK(br(p7, Player::kIsolator, *path_segment_isolator(p7)) == 2);
  const Graph c9 = cycle_graph(9);
  CHECK(br(c9, Player::kIsolator, *two_regular_isolator(c9)) == 1);
  const Graph c3x3 = c3_components(3);
  CHECK(br(c3x3, Player::kToucher, *c3_components_toucher(c3x3)) == 1);
  const Graph c3x2 = c3_components(2);
  CHECK(br(c3x2, Player::kIsolator, *two_regular_isolator(c3x2)) == 1);
  const Graph k4 = k4_components(2);
  CHECK(br(k4, Player::kToucher, *k4_components_toucher(k4)) == 0);
  // The strategy side must match.
  CHECK_THROWS_AS(br(k4, Player::kIsolator, *k4_components_toucher(k4)), std::invalid_argument);
}

TEST_CASE("subgames") {
  SubgameSpec single;
  single.region = {0};
  single.objective = {0, 1};
  CHECK(solve_subgame(path_graph(2), single).value == 0);

  SubgameSpec isolated;
  isolated.region = {1};
  isolated.preclaimed = {{0, Player::kIsolator}, {2, Player::kIsolator}};
  isolated.objective = {0};
  CHECK(solve_subgame(cycle_graph(3), isolated).value >= 1);

  // Passing lets the region player wait for the opponent to commit.
  SubgameSpec p3;
  p3.region = {0, 1};
  p3.first_mover = Player::kToucher;
  p3.objective = {0, 1, 2};
  const int no_pass = solve_subgame(path_graph(3), p3).value;
  p3.pass_allowed = {Player::kToucher};
  CHECK(solve_subgame(path_graph(3), p3).value <= no_pass);

  SubgameSpec bad;
  bad.region = {0, 0};
  CHECK_THROWS_AS(solve_subgame(path_graph(2), bad), SolverError);
  // A preclaimed region edge is already owned when play starts.
  SubgameSpec owned;
  owned.region = {0, 1};
  owned.preclaimed = {{0, Player::kIsolator}};
  owned.first_mover = Player::kIsolator;
  owned.objective = {0};
  CHECK(solve_subgame(path_graph(3), owned).value == 1);
}

TEST_CASE("gadget block kernel") {
  const Graph g = gadget24();
  SubgameSpec spec;
  for (EdgeId e = 22; e <= 32; ++e) spec.region.push_back(e);
  spec.preclaimed = {{kGadgetE23, Player::kIsolator}, {kGadgetE13, Player::kToucher}};
  spec.first_mover = Player::kIsolator;
  spec.pass_allowed = {Player::kToucher};
  for (VertexId v = 16; v < 24; ++v) spec.objective.push_back(v);
  const SolveResult r = solve_subgame(g, spec);
  CHECK(r.value == 1);
  CHECK(r.best_move.has_value());
  spec.pass_allowed.clear();
  CHECK(solve_subgame(g, spec).value == 1);
}

TEST_CASE("value table and JSON") {
  FamilySpec stars;
  stars.family = "star";
  const auto rows = value_table(stars, {3, 5, 7});
  REQUIRE(rows.size() == 3);
  CHECK(rows[2].n == 7);
  CHECK(rows[2].value == 3);
  FamilySpec triangles;
  triangles.family = "c3_components";
  CHECK(value_table(triangles, {1, 3})[1].value == 1);

  const auto j = nlohmann::json::parse(solve_result_json(solve_exact(cycle_graph(4))));
  CHECK(j["value"] == 1);
  CHECK(j.contains("best_move"));
  CHECK(j.contains("nodes"));
  CHECK(j.contains("table_hits"));
  CHECK(j.contains("elapsed_ms"));
  CHECK(j["ceiling"] == kDefaultEdgeCeiling);
  const Graph edge = path_graph(2);
  GameState done(edge);
  done.apply(0);
  CHECK(nlohmann::json::parse(solve_result_json(solve_position(done)))["best_move"].is_null());
}
