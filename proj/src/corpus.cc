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

#include "toucher/corpus.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <utility>

#include "toucher/generators.h"

namespace toucher {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

int uniform_between(std::mt19937_64& rng, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_between: empty range");
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  }
  return perm;
}

Graph random_tree(std::mt19937_64& rng, int n) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be positive");
  const std::vector<int> label = random_permutation(rng, n);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    const int parent = uniform_between(rng, 0, i - 1);
    edges.push_back({label[parent], label[i]});
  }
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(std::mt19937_64& rng, int n, int m) {
  const int max_m = n * (n - 1) / 2;
  if (n < 1 || m < n - 1 || m > max_m) {
    throw std::invalid_argument("random_connected_graph: need n-1 <= m <= n(n-1)/2");
  }
  Graph tree = random_tree(rng, n);
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  std::set<std::pair<int, int>> present;
  for (const Edge& e : edges) present.insert(std::minmax(e.u, e.v));
  std::vector<std::pair<int, int>> absent;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!present.count({u, v})) absent.push_back({u, v});
    }
  }
  for (int k = 0; k < m - (n - 1); ++k) {
    const auto pick = uniform_below(rng, absent.size());
    edges.push_back({absent[pick].first, absent[pick].second});
    absent.erase(absent.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  // Shuffle edge ids so that tree edges are not always first.
  const std::vector<int> order = random_permutation(rng, static_cast<int>(edges.size()));
  std::vector<Edge> shuffled;
  for (int i : order) shuffled.push_back(edges[i]);
  return Graph(n, std::move(shuffled));
}

Graph two_hub_graph() {
  // Hubs 0 and 1; vertices 2..5 each joined to both hubs.
  std::vector<Edge> edges;
  for (int v = 2; v <= 5; ++v) {
    edges.push_back({0, v});
    edges.push_back({1, v});
  }
  return Graph(6, std::move(edges));
}

std::vector<CorpusEntry> tight_examples() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, Graph g) { out.push_back({std::move(name), std::move(g), true}); };
  for (int n : {3, 4}) add("cycle(" + std::to_string(n) + ")", cycle_graph(n));
  for (int n : {2, 3, 6, 7}) add("path(" + std::to_string(n) + ")", path_graph(n));
  for (int n : {3, 5, 7, 9}) add("star(" + std::to_string(n) + ")", star_graph(n));
  for (int c : {1, 2, 3}) add("k2_components(" + std::to_string(c) + ")", k2_components(c));
  for (int x : {0, 1, 2, 3}) {
    add("p3_components_plus_p2(" + std::to_string(x) + ")", p3_components_plus_p2(x));
  }
  for (int c : {1, 2, 3, 5}) add("c3_components(" + std::to_string(c) + ")", c3_components(c));
  for (int c : {1, 2}) add("c4_components(" + std::to_string(c) + ")", c4_components(c));
  for (int c : {1, 2}) add("k4_components(" + std::to_string(c) + ")", k4_components(c));
  add("circulant(5,1,2)", circulant_graph(5, {1, 2}));
  add("circulant(8,1,2)", circulant_graph(8, {1, 2}));
  add("two_hub", two_hub_graph());
  return out;
}

namespace {

std::string numbered(const char* stem, int i) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s_%02d", stem, i);
  return buf;
}

}  // namespace

std::vector<CorpusEntry> random_connected_corpus(std::uint64_t seed, int count, int max_edges) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    const int n = uniform_between(rng, 3, 9);
    const int hi = std::min(max_edges, n * (n - 1) / 2);
    const int m = uniform_between(rng, n - 1, std::max(n - 1, hi));
    out.push_back({numbered("random_graph", i), random_connected_graph(rng, n, m), false});
  }
  return out;
}

std::vector<CorpusEntry> random_tree_corpus(std::uint64_t seed, int count, int max_vertices) {
  std::mt19937_64 rng(seed ^ 0x7472656573ULL);
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    const int n = uniform_between(rng, 3, max_vertices);
    out.push_back({numbered("random_tree", i), random_tree(rng, n), false});
  }
  return out;
}

std::vector<CorpusEntry> default_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out = tight_examples();
  for (auto& e : random_connected_corpus(seed)) out.push_back(std::move(e));
  for (auto& e : random_tree_corpus(seed)) out.push_back(std::move(e));
  return out;
}

}  // namespace toucher
