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

#include "toucher/generators.h"

#include <algorithm>
#include <set>

namespace toucher {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Graph cycle_graph(int n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
  require(n >= 2, "star requires n >= 2");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph(n, std::move(edges));
}

Graph k2_components(int c) {
  require(c >= 1, "k2_components requires c >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < c; ++i) edges.push_back({2 * i, 2 * i + 1});
  return Graph(2 * c, std::move(edges));
}

Graph p3_components_plus_p2(int x) {
  require(x >= 0, "p3_components_plus_p2 requires x >= 0");
  std::vector<Edge> edges;
  for (int j = 0; j < x; ++j) {
    edges.push_back({3 * j, 3 * j + 1});
    edges.push_back({3 * j + 1, 3 * j + 2});
  }
  edges.push_back({3 * x, 3 * x + 1});
  return Graph(3 * x + 2, std::move(edges));
}

Graph c3_components(int c) {
  require(c >= 1, "c3_components requires c >= 1");
  std::vector<Edge> edges;
  for (int j = 0; j < c; ++j) {
    int a = 3 * j;
    edges.push_back({a, a + 1});
    edges.push_back({a + 1, a + 2});
    edges.push_back({a + 2, a});
  }
  return Graph(3 * c, std::move(edges));
}

Graph c4_components(int c) {
  require(c >= 1, "c4_components requires c >= 1");
  std::vector<Edge> edges;
  for (int j = 0; j < c; ++j) {
    int a = 4 * j;
    for (int i = 0; i < 4; ++i) edges.push_back({a + i, a + (i + 1) % 4});
  }
  return Graph(4 * c, std::move(edges));
}

Graph k4_components(int c) {
  require(c >= 1, "k4_components requires c >= 1");
  std::vector<Edge> edges;
  for (int j = 0; j < c; ++j) {
    int a = 4 * j;
    for (int x = 0; x < 4; ++x) {
      for (int y = x + 1; y < 4; ++y) edges.push_back({a + x, a + y});
    }
  }
  return Graph(4 * c, std::move(edges));
}

Graph circulant_graph(int n, std::vector<int> offsets) {
  require(n >= 3, "circulant requires n >= 3");
  require(!offsets.empty(), "circulant requires at least one offset");
  std::set<int> distinct(offsets.begin(), offsets.end());
  require(distinct.size() == offsets.size(), "circulant offsets must be distinct");
  std::vector<Edge> edges;
  for (int s : offsets) {
    require(s >= 1 && 2 * s <= n, "circulant offsets must lie in 1..n/2");
    int limit = (2 * s == n) ? n / 2 : n;
    for (int i = 0; i < limit; ++i) edges.push_back({i, (i + s) % n});
  }
  return Graph(n, std::move(edges));
}

GadgetBlock gadget_block(int block) {
  require(block >= 0 && block < 3, "gadget block index must be 0, 1 or 2");
  VertexId b = 8 * block;
  EdgeId e = 11 * block;
  return GadgetBlock{b, b + 1, b + 2, b + 3, b + 4, b + 5, b + 6, b + 7,
                     e, e + 1, e + 2, e + 3, e + 4, e + 5, e + 6, e + 7,
                     e + 8, e + 9, e + 10};
}

Graph gadget24() {
  std::vector<Edge> edges;
  for (int block = 0; block < 3; ++block) {
    GadgetBlock h = gadget_block(block);
    edges.push_back({h.v1, h.v2});
    edges.push_back({h.v2, h.v5});
    edges.push_back({h.v5, h.v3});
    edges.push_back({h.v3, h.v4});
    edges.push_back({h.v4, h.v1});
    edges.push_back({h.u1, h.u2});
    edges.push_back({h.u2, h.u3});
    edges.push_back({h.u3, h.u1});
    edges.push_back({h.u1, h.v3});
    edges.push_back({h.u2, h.v1});
    edges.push_back({h.u3, h.v2});
  }
  GadgetBlock h1 = gadget_block(0), h2 = gadget_block(1), h3 = gadget_block(2);
  edges.push_back({h1.v4, h2.v4});  // e12
  edges.push_back({h1.v5, h3.v5});  // e13
  edges.push_back({h2.v5, h3.v4});  // e23
  return Graph(24, std::move(edges));
}

bool family_uses_n(std::string_view family) {
  return family == "cycle" || family == "path" || family == "star" ||
         family == "circulant";
}

std::vector<std::string> family_names() {
  return {"cycle",         "path",          "star",          "k2_components",
          "p3_components_plus_p2",          "c3_components", "c4_components",
          "k4_components", "circulant",     "gadget24"};
}

Graph generate(const FamilySpec& spec) {
  const std::string& f = spec.family;
  if (f == "cycle") return cycle_graph(spec.n);
  if (f == "path") return path_graph(spec.n);
  if (f == "star") return star_graph(spec.n);
  if (f == "k2_components") return k2_components(spec.count);
  if (f == "p3_components_plus_p2") return p3_components_plus_p2(spec.count);
  if (f == "c3_components") return c3_components(spec.count);
  if (f == "c4_components") return c4_components(spec.count);
  if (f == "k4_components") return k4_components(spec.count);
  if (f == "circulant") return circulant_graph(spec.n, spec.offsets);
  if (f == "gadget24") return gadget24();
  throw std::invalid_argument("unknown graph family '" + f + "'");
}

}  // namespace toucher
