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

// Toucher strategies for graphs made of K4 components or of an odd number
// of triangles.

#include <algorithm>
#include <stdexcept>

#include "segment_machines.h"
#include "toucher/strategies.h"

namespace toucher {

namespace {

struct ComponentIndex {
  std::vector<int> of_edge;
  std::vector<std::vector<EdgeId>> edges;  // ascending ids per component
};

ComponentIndex index_components(const Graph& g) {
  ComponentIndex index;
  std::vector<int> comp_of_vertex = g.component_of_vertices();
  const int count = static_cast<int>(g.components().size());
  index.edges.assign(count, {});
  index.of_edge.assign(g.num_edges(), -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int c = comp_of_vertex[g.edge(e).u];
    index.of_edge[e] = c;
    index.edges[c].push_back(e);
  }
  return index;
}

bool shares_vertex(const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

VertexId common_vertex(const Edge& a, const Edge& b) {
  return (a.u == b.u || a.u == b.v) ? a.u : a.v;
}

// In every K4, Toucher answers Isolator's first edge with the disjoint
// edge, the second (which meets the first in p and the disjoint edge in q)
// with the edge from p to the other end of the disjoint edge, and the third
// with the last free edge. Toucher's own surplus moves (the opening move,
// or moves made when the prescribed edge was already hers) are invisible to
// the plan, which only counts the edges it asked for.
class K4ComponentsToucher : public Strategy {
 public:
  explicit K4ComponentsToucher(const Graph& g) : graph_(&g), index_(index_components(g)) {
    for (const auto& comp : g.components()) {
      if (comp.size() != 4) throw std::invalid_argument("k4_components: component is not K4");
    }
    for (const auto& edges : index_.edges) {
      if (edges.size() != 6) throw std::invalid_argument("k4_components: component is not K4");
    }
  }

  std::string name() const override { return "k4_components"; }
  Player side() const override { return Player::kToucher; }

  void reset(const GameState& initial) override {
    planned_.assign(initial.graph().num_edges(), 0);
    pending_ = kNoEdge;
  }

  void observe(const GameState& after, EdgeId edge, Player mover) override {
    if (mover == Player::kToucher) {
      if (pending_ != kNoEdge && after.owner(pending_) == Owner::kToucher) planned_[pending_] = 1;
      pending_ = kNoEdge;
      return;
    }
    pending_ = reply(after, edge);
  }

  EdgeId choose(const GameState& s) const override {
    if (pending_ != kNoEdge && s.is_free(pending_)) return pending_;
    return lowest_free_edge(s);
  }

  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<K4ComponentsToucher>(*this);
  }

  std::string digest() const override {
    return detail::pack_bits(planned_) + '|' + std::to_string(pending_);
  }

 private:
  EdgeId reply(const GameState& s, EdgeId isolator_edge) const {
    const Graph& g = *graph_;
    const std::vector<EdgeId>& comp = index_.edges[index_.of_edge[isolator_edge]];
    auto open = [&](EdgeId e) { return !planned_[e] && s.owner(e) != Owner::kIsolator; };
    std::vector<EdgeId> theirs;
    for (EdgeId e : comp) {
      if (s.owner(e) == Owner::kIsolator && e != isolator_edge) theirs.push_back(e);
    }
    const Edge& last = g.edge(isolator_edge);
    EdgeId wanted = kNoEdge;
    if (theirs.empty()) {
      for (EdgeId e : comp) {
        if (!shares_vertex(g.edge(e), last)) wanted = e;
      }
    } else if (theirs.size() == 1) {
      const Edge& first = g.edge(theirs[0]);
      if (shares_vertex(first, last)) {
        const VertexId p = common_vertex(first, last);
        const VertexId q = last.other(p);
        for (EdgeId e : comp) {
          const Edge& cand = g.edge(e);
          // The edge from p to the vertex outside first ∪ last.
          const bool has_p = cand.u == p || cand.v == p;
          const VertexId w = has_p ? cand.other(p) : -1;
          if (has_p && w != q && w != first.other(p)) wanted = e;
        }
      }
    }
    if (wanted != kNoEdge && open(wanted)) return wanted;
    for (EdgeId e : comp) {
      if (open(e)) return e;
    }
    return kNoEdge;
  }

  const Graph* graph_;
  ComponentIndex index_;
  std::vector<std::uint8_t> planned_;
  EdgeId pending_ = kNoEdge;
};

// Opens triangle 0; the remaining triangles are paired (1,2), (3,4), ...
// Isolator entering a triangle Toucher already holds is answered there;
// Isolator entering a fresh triangle is answered by opening its partner when
// the partner is fresh; otherwise Toucher touches Isolator's triangle.
class C3ComponentsToucher : public Strategy {
 public:
  explicit C3ComponentsToucher(const Graph& g) : index_(index_components(g)) {
    for (const auto& comp : g.components()) {
      if (comp.size() != 3) throw std::invalid_argument("c3_components: component is not C3");
    }
    for (const auto& edges : index_.edges) {
      if (edges.size() != 3) throw std::invalid_argument("c3_components: component is not C3");
    }
    if (index_.edges.size() % 2 == 0) {
      throw std::invalid_argument("c3_components: needs an odd number of triangles");
    }
  }

  std::string name() const override { return "c3_components"; }
  Player side() const override { return Player::kToucher; }
  void reset(const GameState&) override { last_isolator_ = kNoEdge; }
  void observe(const GameState&, EdgeId edge, Player mover) override {
    if (mover == Player::kIsolator) last_isolator_ = edge;
  }

  EdgeId choose(const GameState& s) const override {
    if (last_isolator_ == kNoEdge) {
      EdgeId e = lowest_free_among(s, index_.edges[0]);
      return e != kNoEdge ? e : lowest_free_edge(s);
    }
    const int c = index_.of_edge[last_isolator_];
    const std::vector<EdgeId>& here = index_.edges[c];
    const int toucher_here = count(s, here, Owner::kToucher);
    const int isolator_here = count(s, here, Owner::kIsolator);
    const EdgeId free_here = lowest_free_among(s, here);
    if (toucher_here > 0 && free_here != kNoEdge) return free_here;
    if (toucher_here == 0 && isolator_here == 1 && c > 0) {
      const int partner = c % 2 == 1 ? c + 1 : c - 1;
      const std::vector<EdgeId>& there = index_.edges[partner];
      if (count(s, there, Owner::kFree) == 3) return there.front();
    }
    if (free_here != kNoEdge) return free_here;
    return lowest_free_edge(s);
  }

  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<C3ComponentsToucher>(*this);
  }
  std::string digest() const override { return std::to_string(last_isolator_); }

 private:
  static int count(const GameState& s, const std::vector<EdgeId>& edges, Owner who) {
    return static_cast<int>(
        std::count_if(edges.begin(), edges.end(), [&](EdgeId e) { return s.owner(e) == who; }));
  }

  ComponentIndex index_;
  EdgeId last_isolator_ = kNoEdge;
};

}  // namespace

std::unique_ptr<Strategy> k4_components_toucher(const Graph& g) {
  return std::make_unique<K4ComponentsToucher>(g);
}

std::unique_ptr<Strategy> c3_components_toucher(const Graph& g) {
  return std::make_unique<C3ComponentsToucher>(g);
}

}  // namespace toucher
