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

#ifndef TOUCHER_STRATEGIES_H_
#define TOUCHER_STRATEGIES_H_

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "toucher/graph.h"
#include "toucher/orientation.h"
#include "toucher/strategy.h"

namespace toucher {

// Potential-function players: claim the free edge with the largest
// endpoint-danger sum, lowest id on ties.
std::unique_ptr<Strategy> max_danger_toucher();
std::unique_ptr<Strategy> max_danger_isolator();

// Which half-edges of the Eulerian orientation the pairing is built from.
enum class PairingVariant { kIncoming, kOutgoing };

// Disjoint edge pairs for the pairing Toucher.
struct PairingPlan {
  Orientation orientation;
  PairingVariant variant = PairingVariant::kIncoming;
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  // Vertices that own a dedicated pair of their own (two or more edges on
  // the chosen side of the orientation).
  std::vector<VertexId> dedicated;
  // Vertices with exactly one chosen-side edge and degree at most 3; their
  // single edges are pooled and paired across vertices.
  std::vector<VertexId> pooled;
  // Unpaired pool edge when the pool is odd; Toucher claims it first.
  EdgeId forced_first = kNoEdge;
  // partner[e] is the other edge of e's pair, kNoEdge if e is unpaired.
  std::vector<EdgeId> partner;
};

PairingPlan build_pairing_plan(const Graph& g, PairingVariant variant = PairingVariant::kIncoming);

// Untouched-vertex ceiling the plan enforces when Toucher moves first:
// vertices with no chosen-side edge, plus one vertex per pool pair.
int pairing_guarantee(const Graph& g, const PairingPlan& plan);

// Answers every Isolator move inside a pair with its partner; otherwise
// plays the forced edge (if any) and then the lowest free edge.
std::unique_ptr<Strategy> pairing_toucher(const Graph& g,
                                          PairingVariant variant = PairingVariant::kIncoming);

// Edges joining two leaves first, then edges with one leaf endpoint, then
// the lowest free edge.
std::unique_ptr<Strategy> leaf_priority_isolator(const Graph& g);

// Segment strategies. The graph must be a cycle / a path / 2-regular;
// std::invalid_argument otherwise. The graph must outlive the strategy.
std::unique_ptr<Strategy> cycle_segment_isolator(const Graph& g);
std::unique_ptr<Strategy> path_segment_isolator(const Graph& g);
std::unique_ptr<Strategy> two_regular_isolator(const Graph& g);

// Component strategies for Toucher: every component a K4, or an odd number
// of triangles.
std::unique_ptr<Strategy> k4_components_toucher(const Graph& g);
std::unique_ptr<Strategy> c3_components_toucher(const Graph& g);

// Uniform choice among free edges, derived from (seed, move index) by a
// fixed mixing function, so identical histories give identical moves.
std::unique_ptr<Strategy> random_strategy(Player side, std::uint64_t seed);

}  // namespace toucher

#endif  // TOUCHER_STRATEGIES_H_
