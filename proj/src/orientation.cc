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

#include "toucher/orientation.h"

#include <algorithm>

namespace toucher {

std::vector<EdgeId> Orientation::incoming(VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(head.size()); ++e) {
    if (head[e] == v) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> Orientation::outgoing(VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(tail.size()); ++e) {
    if (tail[e] == v) out.push_back(e);
  }
  return out;
}

Orientation Orientation::reversed() const {
  Orientation r;
  r.tail = head;
  r.head = tail;
  r.indeg.assign(indeg.size(), 0);
  for (VertexId h : r.head) ++r.indeg[h];
  return r;
}

Orientation eulerian_orientation(const Graph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const VertexId aux = n;

  // Augmented multigraph adjacency; auxiliary edges get ids m, m+1, ...
  std::vector<std::vector<Incidence>> adj(n + 1);
  std::vector<Edge> all(g.edges().begin(), g.edges().end());
  for (VertexId v = 0; v < n; ++v) {
    for (const Incidence& inc : g.incident(v)) adj[v].push_back(inc);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) % 2 == 1) {
      EdgeId id = static_cast<EdgeId>(all.size());
      all.push_back({v, aux});
      adj[v].push_back({id, aux});
      adj[aux].push_back({id, v});
    }
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.edge < b.edge; });
  }

  std::vector<VertexId> tail(all.size(), -1), head(all.size(), -1);
  std::vector<bool> used(all.size(), false);
  std::vector<size_t> cursor(n + 1, 0);

  // Starting each circuit at the lowest vertex with an unused edge visits
  // components in order of their lowest vertex.
  for (VertexId start = 0; start <= n; ++start) {
    std::vector<VertexId> stack{start};
    while (!stack.empty()) {
      VertexId v = stack.back();
      auto& list = adj[v];
      while (cursor[v] < list.size() && used[list[cursor[v]].edge]) ++cursor[v];
      if (cursor[v] == list.size()) {
        stack.pop_back();
        continue;
      }
      const Incidence& inc = list[cursor[v]];
      used[inc.edge] = true;
      tail[inc.edge] = v;
      head[inc.edge] = inc.neighbor;
      stack.push_back(inc.neighbor);
    }
  }

  Orientation o;
  o.tail.assign(tail.begin(), tail.begin() + m);
  o.head.assign(head.begin(), head.begin() + m);
  o.indeg.assign(n, 0);
  for (VertexId h : o.head) ++o.indeg[h];
  return o;
}

}  // namespace toucher
