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

#ifndef TOUCHER_CORPUS_H_
#define TOUCHER_CORPUS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "toucher/graph.h"

namespace toucher {

inline constexpr std::uint64_t kDefaultCorpusSeed = 20260915;

// Unbiased draw from [0, bound) by rejection, identical on every platform
// (unlike std::uniform_int_distribution, whose algorithm is unspecified).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
// Uniform in [lo, hi].
int uniform_between(std::mt19937_64& rng, int lo, int hi);
// Fisher-Yates permutation of 0..n-1.
std::vector<int> random_permutation(std::mt19937_64& rng, int n);

struct CorpusEntry {
  std::string name;
  Graph graph;
  bool tight_example = false;
};

// Connected graph on n vertices with m edges (n-1 <= m <= n(n-1)/2): a
// random recursive tree plus random extra edges, randomly relabelled.
Graph random_connected_graph(std::mt19937_64& rng, int n, int m);
Graph random_tree(std::mt19937_64& rng, int n);

// A degree-2 vertex joined to two degree-4 hubs (the complete bipartite
// graph K_{2,4}); the vertex-pair refinement lowers its danger sum by 1/8.
Graph two_hub_graph();

// Small extremal examples: cycles, paths, stars, component families, K5,
// the circulant C8(1,2) and the two-hub graph.
std::vector<CorpusEntry> tight_examples();
// `count` connected graphs with 3..9 vertices and at most `max_edges` edges.
std::vector<CorpusEntry> random_connected_corpus(std::uint64_t seed, int count = 50,
                                                 int max_edges = 14);
// `count` trees with 3..max_vertices vertices.
std::vector<CorpusEntry> random_tree_corpus(std::uint64_t seed, int count = 20,
                                            int max_vertices = 15);
// Tight examples, then the random graphs, then the random trees.
std::vector<CorpusEntry> default_corpus(std::uint64_t seed = kDefaultCorpusSeed);

}  // namespace toucher

#endif  // TOUCHER_CORPUS_H_
