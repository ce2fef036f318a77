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

#ifndef TOUCHER_GRAPH_H_
#define TOUCHER_GRAPH_H_

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toucher {

using VertexId = int;
using EdgeId = int;

inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  EdgeId edge = kNoEdge;
  VertexId neighbor = 0;
};

// Thrown for structurally invalid graphs: loops, duplicate edges, endpoints
// out of range.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public GraphError {
 public:
  enum class Kind { kMalformedHeader, kMalformedEdge, kOutOfRange, kLoop,
                    kDuplicate, kEdgeCount };

  ParseError(Kind kind, int line, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

// Immutable simple undirected graph. Edge ids are 0..m-1 in construction
// order; adjacency lists are ordered by edge id.
class Graph {
 public:
  Graph() = default;
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(VertexId v) const {
    return adjacency_.at(v);
  }
  int degree(VertexId v) const {
    return static_cast<int>(adjacency_.at(v).size());
  }
  int max_degree() const;

  // kNoEdge when u and v are not adjacent.
  EdgeId find_edge(VertexId u, VertexId v) const;

  // Connected components as lists of vertices (ascending), ordered by their
  // smallest vertex.
  std::vector<std::vector<VertexId>> components() const;
  // Per-vertex component index matching components().
  std::vector<int> component_of_vertices() const;

  bool is_connected() const;
  bool operator==(const Graph& other) const {
    return num_vertices_ == other.num_vertices_ && edges_ == other.edges_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Graph file format: header "n m", then m lines "u v"; '#' lines ignored.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

struct DegreeHistogram {
  std::map<int, int> counts;
  int max_degree = 0;

  int count(int degree) const {
    auto it = counts.find(degree);
    return it == counts.end() ? 0 : it->second;
  }
};

DegreeHistogram degree_histogram(const Graph& g);

// Structural classification used by the bound report and the strategies.
bool is_tree(const Graph& g);
bool is_two_regular(const Graph& g);
bool is_cycle(const Graph& g);
bool is_path(const Graph& g);
bool is_cubic(const Graph& g);

// Edges of a cycle component in traversal order, starting at the component's
// lowest vertex and leaving it along its lower-id edge. Requires every vertex
// of `component` to have degree 2.
std::vector<EdgeId> cycle_edge_order(const Graph& g,
                                     std::span<const VertexId> component);

// Edges of a path graph from the lower-id leaf to the other leaf.
std::vector<EdgeId> path_edge_order(const Graph& g);

// Same graph with edges reordered: new edge i is old edge perm[i].
Graph permute_edges(const Graph& g, std::span<const EdgeId> perm);

}  // namespace toucher

#endif  // TOUCHER_GRAPH_H_
