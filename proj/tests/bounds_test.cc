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

#include <json.hpp>

#include "toucher/bounds.h"
#include "toucher/corpus.h"
#include "toucher/generators.h"
#include "toucher/solver.h"

using namespace toucher;

TEST_CASE("cycle(4) closed forms") {
  const BoundsReport r = closed_form_bounds(cycle_graph(4));
  CHECK(r.entry("danger_sum.upper").raw == Rational(1));
  CHECK(r.entry("cycle.upper").raw == Rational(1));
  CHECK(r.entry("cycle.lower").raw == Rational(3, 16));
  CHECK(r.entry("cycle.lower").tightened == 1);
  CHECK(r.entry("degree_classes.lower").raw == Rational(-1));
  CHECK(r.entry("degree_classes.lower").tightened == 0);
  CHECK(r.entry("cycle.lower").applicable);
  CHECK(r.entry("two_regular.lower").applicable);
  CHECK_FALSE(r.entry("path.lower").applicable);
  CHECK(r.best_lower() == 1);
  CHECK(r.best_upper() == 1);
}

TEST_CASE("star(7) tree bounds") {
  const BoundsReport r = closed_form_bounds(star_graph(7));
  CHECK(r.entry("tree.lower").raw == Rational(9, 8));
  CHECK(r.entry("tree.lower").tightened == 2);
  CHECK(r.entry("tree.leaf_lower").raw == Rational(12, 8));
  CHECK(r.entry("tree.leaf_lower").tightened == 2);
  CHECK(r.entry("tree.upper").tightened == 3);
  REQUIRE(r.tree_leaf_pair_note.has_value());
  CHECK(*r.tree_leaf_pair_note == Rational(5, 2));
}

TEST_CASE("gadget24 closed forms") {
  const BoundsReport r = closed_form_bounds(gadget24());
  CHECK(r.entry("cubic.upper").tightened == 3);
  CHECK(r.entry("degree_classes.upper").tightened == 6);
  CHECK(r.entry("danger_sum.upper").raw == Rational(3));
  CHECK(r.entry("danger_sum.lower").raw == Rational(-19, 8));
  CHECK(r.entry("danger_sum.lower").tightened == 0);
  CHECK(r.families == std::vector<std::string>{"cubic"});
}

TEST_CASE("family detection") {
  CHECK(closed_form_bounds(path_graph(5)).entry("path.lower").applicable);
  CHECK(closed_form_bounds(path_graph(5)).entry("tree.lower").applicable);
  CHECK_FALSE(closed_form_bounds(path_graph(2)).entry("tree.lower").applicable);  // needs n > 2
  CHECK(closed_form_bounds(c3_components(2)).entry("two_regular.lower").applicable);
  CHECK_FALSE(closed_form_bounds(c3_components(2)).entry("cycle.lower").applicable);
  CHECK(closed_form_bounds(k4_components(1)).entry("cubic.upper").applicable);
}

TEST_CASE("declared families") {
  const BoundsReport r = closed_form_bounds(star_graph(5), std::string("path"));
  CHECK(r.entry("path.lower").applicable);
  CHECK(r.entry("path.lower").reason == "declared");
  CHECK_THROWS_AS(closed_form_bounds(star_graph(5), std::string("petersen")), std::invalid_argument);
  CHECK_THROWS_AS(r.entry("no.such"), std::out_of_range);
}

TEST_CASE("refinement") {
  const Graph hub = two_hub_graph();
  CHECK(danger_sum(hub) == Rational(9, 8));
  CHECK(refined_upper_bound(hub) == Rational(1));
  CHECK(refined_upper_bound(circulant_graph(8, {1, 2})) == danger_sum(circulant_graph(8, {1, 2})));
  CHECK(refined_upper_bound(star_graph(5)) == danger_sum(star_graph(5)));
}

TEST_CASE("sandwich verdicts on tight examples") {
  auto find = [](const std::vector<SandwichVerdict>& v, const std::string& name) {
    for (const auto& x : v) {
      if (x.name == name) return x;
    }
    FAIL("missing verdict " << name);
    return SandwichVerdict{};
  };
  const auto c3 = sandwich_check(cycle_graph(3), 0);
  CHECK(find(c3, "cycle.lower").holds);
  CHECK(find(c3, "cycle.lower").tight);
  const auto k2x3 = sandwich_check(k2_components(3), 2);
  CHECK(find(k2x3, "degree_classes.lower").tight);
  const auto k2x2 = sandwich_check(k2_components(2), 2);
  CHECK(find(k2x2, "danger_sum.upper").tight);
  const auto wrong = sandwich_check(cycle_graph(4), 3);
  CHECK_FALSE(find(wrong, "cycle.upper").holds);
}

TEST_CASE("property: bounds contain u on the corpus") {
  for (const auto& entry : default_corpus()) {
    if (entry.graph.num_edges() > 14) continue;
    const int u = solve_exact(entry.graph).value;
    for (const auto& v : sandwich_check(entry.graph, u)) CHECK_MESSAGE(v.holds, entry.name, " ", v.name);
    const BoundsReport r = closed_form_bounds(entry.graph);
    CHECK(r.best_lower() <= u);
    CHECK(u <= r.best_upper());
    CHECK(refined_upper_bound(entry.graph) <= danger_sum(entry.graph));
    CHECK(Rational(u) <= refined_upper_bound(entry.graph));
    CHECK(r.entry("danger_sum.lower").raw < r.entry("danger_sum.upper").raw);
  }
}

TEST_CASE("danger_sum beats degree_classes on paths") {
  for (int n = 3; n <= 20; ++n) {
    const BoundsReport r = closed_form_bounds(path_graph(n));
    CHECK(r.entry("danger_sum.lower").raw > r.entry("degree_classes.lower").raw);
    CHECK(r.dominant_lower == "danger_sum");
  }
}

TEST_CASE("JSON keeps raw values exact") {
  const auto j = nlohmann::json::parse(bounds_report_json(closed_form_bounds(cycle_graph(4))));
  bool found = false;
  for (const auto& e : j["entries"]) {
    if (e["name"] == "cycle.lower") {
      CHECK(e["raw"] == "3/16");
      CHECK(e["tightened"] == 1);
      CHECK(e["kind"] == "lower");
      found = true;
    }
  }
  CHECK(found);
}
