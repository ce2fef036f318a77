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
#include "toucher/graph.h"
#include "toucher/orientation.h"

using namespace toucher;

TEST_CASE("graph file round-trip") {
  const Graph g = gadget24();
  const Graph back = parse_graph(format_graph(g));
  CHECK(back == g);
  CHECK(format_graph(back) == format_graph(g));
}

TEST_CASE("graph file comments and blank lines are ignored") {
  const Graph g = parse_graph("# a path\n3 2\n\n0 1\n# middle\n1 2\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.edge(1) == Edge{1, 2});
}

TEST_CASE("graph file errors carry kind and line") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return std::pair{e.kind(), e.line()};
    }
    FAIL("no ParseError for: " << text);
    return std::pair{ParseError::Kind::kMalformedHeader, 0};
  };
  CHECK(kind_of("x y\n") == std::pair{ParseError::Kind::kMalformedHeader, 1});
  CHECK(kind_of("3 1\n0 q\n") == std::pair{ParseError::Kind::kMalformedEdge, 2});
  CHECK(kind_of("3 1\n0 3\n") == std::pair{ParseError::Kind::kOutOfRange, 2});
  CHECK(kind_of("3 1\n1 1\n") == std::pair{ParseError::Kind::kLoop, 2});
  CHECK(kind_of("3 2\n0 1\n1 0\n") == std::pair{ParseError::Kind::kDuplicate, 3});
  CHECK(kind_of("3 2\n0 1\n").first == ParseError::Kind::kEdgeCount);
}

TEST_CASE("constructor rejects loops and duplicates") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), GraphError);
}

TEST_CASE("family numbering") {
  const Graph c = cycle_graph(5);
  CHECK(c.edge(4) == Edge{4, 0});
  CHECK(is_cycle(c));
  CHECK(is_two_regular(c));
  CHECK_FALSE(is_tree(c));

  const Graph p = path_graph(4);
  CHECK(p.edge(2) == Edge{2, 3});
  CHECK(is_path(p));
  CHECK(is_tree(p));

  const Graph s = star_graph(5);
  CHECK(s.degree(0) == 4);
  CHECK(s.edge(3) == Edge{0, 4});

  const Graph k = k4_components(2);
  CHECK(k.num_vertices() == 8);
  CHECK(k.num_edges() == 12);
  CHECK(k.components().size() == 2);

  const Graph x = p3_components_plus_p2(2);
  CHECK(x.num_vertices() == 8);
  CHECK(x.num_edges() == 5);
  CHECK(x.edge(4) == Edge{6, 7});

  CHECK(c4_components(2).num_edges() == 8);
  CHECK(c3_components(3).num_edges() == 9);
  CHECK(k2_components(3).num_vertices() == 6);
}

TEST_CASE("circulant offsets") {
  const Graph k5 = circulant_graph(5, {1, 2});
  CHECK(k5.num_edges() == 10);
  CHECK(degree_histogram(k5).count(4) == 5);
  const Graph c8 = circulant_graph(8, {1, 2});
  CHECK(c8.num_edges() == 16);
  // An offset of n/2 contributes each diameter once.
  CHECK(circulant_graph(6, {3}).num_edges() == 3);
  CHECK_THROWS_AS(circulant_graph(6, {4}), std::invalid_argument);
  CHECK_THROWS_AS(circulant_graph(6, {1, 1}), std::invalid_argument);
}

TEST_CASE("gadget24 layout") {
  const Graph g = gadget24();
  CHECK(g.num_vertices() == 24);
  CHECK(g.num_edges() == 36);
  CHECK(is_cubic(g));
  CHECK(g.is_connected());
  const GadgetBlock h1 = gadget_block(0), h2 = gadget_block(1), h3 = gadget_block(2);
  CHECK(g.edge(kGadgetE12) == Edge{h1.v4, h2.v4});
  CHECK(g.edge(kGadgetE13) == Edge{h1.v5, h3.v5});
  CHECK(g.edge(kGadgetE23) == Edge{h2.v5, h3.v4});
  CHECK(h3.v1 == 16);
  CHECK(h3.v1v2 == 22);
  CHECK(h3.u3v2 == 32);
  CHECK(g.edge(h3.u1v3) == Edge{h3.u1, h3.v3});
}

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(star_graph(1), std::invalid_argument);
  CHECK_THROWS_AS(k4_components(0), std::invalid_argument);
  CHECK_THROWS_AS(generate(FamilySpec{"petersen", 10, 0, {}}), std::invalid_argument);
}

TEST_CASE("cycle and path edge orders walk the graph") {
  const Graph c = cycle_graph(7);
  const auto comp = c.components().front();
  const auto order = cycle_edge_order(c, comp);
  CHECK(order.size() == 7);
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    const Edge a = c.edge(order[i]), b = c.edge(order[i + 1]);
    CHECK((a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v));
  }
  const auto porder = path_edge_order(path_graph(6));
  CHECK(porder == std::vector<EdgeId>{0, 1, 2, 3, 4});
}

TEST_CASE("permute_edges keeps the edge set") {
  std::mt19937_64 rng(3);
  const Graph g = random_connected_graph(rng, 7, 11);
  const auto perm = random_permutation(rng, g.num_edges());
  const Graph h = permute_edges(g, perm);
  for (EdgeId i = 0; i < g.num_edges(); ++i) CHECK(h.edge(i) == g.edge(perm[i]));
  CHECK(degree_histogram(h).counts == degree_histogram(g).counts);
}

TEST_CASE("Eulerian orientation balances every vertex") {
  for (const auto& entry : default_corpus()) {
    const Graph& g = entry.graph;
    const Orientation o = eulerian_orientation(g);
    REQUIRE(o.head.size() == static_cast<size_t>(g.num_edges()));
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const int in = static_cast<int>(o.incoming(v).size());
      const int out = static_cast<int>(o.outgoing(v).size());
      CHECK(in + out == g.degree(v));
      CHECK(std::abs(in - out) <= 1);
      CHECK(in == o.indeg[v]);
    }
    const Orientation r = o.reversed();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      CHECK(r.head[e] == o.tail[e]);
      const Edge& ed = g.edge(e);
      CHECK(std::set{o.head[e], o.tail[e]} == std::set{ed.u, ed.v});
    }
  }
}
