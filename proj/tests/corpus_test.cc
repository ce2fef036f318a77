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

#include "toucher/corpus.h"
#include "toucher/graph.h"

using namespace toucher;

TEST_CASE("default corpus manifest") {
  const auto corpus = default_corpus();
  int tight = 0, graphs = 0, trees = 0;
  for (const auto& e : corpus) {
    if (e.tight_example) {
      ++tight;
    } else if (e.name.rfind("random_graph_", 0) == 0) {
      ++graphs;
      CHECK(e.graph.is_connected());
      CHECK(e.graph.num_edges() <= 14);
      CHECK(e.graph.num_vertices() >= 3);
      CHECK(e.graph.num_vertices() <= 9);
    } else if (e.name.rfind("random_tree_", 0) == 0) {
      ++trees;
      CHECK(is_tree(e.graph));
      CHECK(e.graph.num_vertices() <= 15);
    }
  }
  CHECK(tight >= 20);
  CHECK(graphs == 50);
  CHECK(trees == 20);
}

TEST_CASE("corpus is a pure function of the seed") {
  const auto a = default_corpus(123);
  const auto b = default_corpus(123);
  const auto c = default_corpus(124);
  REQUIRE(a.size() == b.size());
  bool differs = false;
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].graph == b[i].graph);
    differs = differs || !(a[i].graph == c[i].graph);
  }
  CHECK(differs);
}

TEST_CASE("portable random helpers") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    CHECK(uniform_below(rng, 7) < 7);
    const int v = uniform_between(rng, -3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
  CHECK_THROWS(uniform_below(rng, 0));
  auto perm = random_permutation(rng, 10);
  std::sort(perm.begin(), perm.end());
  for (int i = 0; i < 10; ++i) CHECK(perm[i] == i);
  // mt19937_64 is fully specified, so the first draws are fixed everywhere.
  std::mt19937_64 a(42), b(42);
  CHECK(uniform_below(a, 1000) == uniform_below(b, 1000));
}

TEST_CASE("random graph generator respects its parameters") {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 9; ++n) {
    for (int m = n - 1; m <= n * (n - 1) / 2; m += 3) {
      const Graph g = random_connected_graph(rng, n, m);
      CHECK(g.num_vertices() == n);
      CHECK(g.num_edges() == m);
      CHECK(g.is_connected());
    }
  }
  CHECK_THROWS(random_connected_graph(rng, 4, 7));
  CHECK_THROWS(random_connected_graph(rng, 4, 2));
}
