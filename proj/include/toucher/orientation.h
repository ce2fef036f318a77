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

#ifndef TOUCHER_ORIENTATION_H_
#define TOUCHER_ORIENTATION_H_

#include <vector>

#include "toucher/graph.h"

namespace toucher {

// Tail/head per edge. Every even-degree vertex has indeg = d/2 and every
// odd-degree vertex has indeg = (d-1)/2 or (d+1)/2.
struct Orientation {
  std::vector<VertexId> tail;
  std::vector<VertexId> head;
  std::vector<int> indeg;

  // Edges whose head (incoming) or tail (outgoing) is v, ascending ids.
  std::vector<EdgeId> incoming(VertexId v) const;
  std::vector<EdgeId> outgoing(VertexId v) const;
  Orientation reversed() const;
};

// Joins an auxiliary vertex to every odd-degree vertex, walks an Eulerian
// circuit of every component of the augmented graph (Hierholzer, starting
// at the component's lowest vertex and always leaving along the lowest
// unused edge id), orients each edge in walking direction and drops the
// auxiliary edges.
Orientation eulerian_orientation(const Graph& g);

}  // namespace toucher

#endif  // TOUCHER_ORIENTATION_H_
