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

#include "toucher/graph.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace toucher {

ParseError::ParseError(Kind kind, int line, const std::string& message)
    : GraphError("line " + std::to_string(line) + ": " + message),
      kind_(kind),
      line_(line) {}

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) throw GraphError("negative vertex count");
  adjacency_.resize(num_vertices_);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.v < 0 || ed.u >= num_vertices_ ||
        ed.v >= num_vertices_) {
      throw GraphError("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (ed.u == ed.v) {
      throw GraphError("edge " + std::to_string(e) + " is a loop");
    }
    if (!seen.emplace(std::min(ed.u, ed.v), std::max(ed.u, ed.v)).second) {
      throw GraphError("edge " + std::to_string(e) + " duplicates an earlier edge");
    }
    adjacency_[ed.u].push_back({e, ed.v});
    adjacency_[ed.v].push_back({e, ed.u});
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
  return best;
}

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
  for (const Incidence& inc : incident(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return kNoEdge;
}

std::vector<int> Graph::component_of_vertices() const {
  std::vector<int> comp(num_vertices_, -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < num_vertices_; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : adjacency_[v]) {
        if (comp[inc.neighbor] == -1) {
          comp[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<std::vector<VertexId>> Graph::components() const {
  std::vector<int> comp = component_of_vertices();
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<VertexId>> out(count);
  for (VertexId v = 0; v < num_vertices_; ++v) out[comp[v]].push_back(v);
  return out;
}

bool Graph::is_connected() const {
  return num_vertices_ <= 1 || components().size() == 1;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  using Kind = ParseError::Kind;
  bool have_header = false;
  long long n = 0, m = 0;
  int header_line = 0;
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens.size() != 2 || !to_int(tokens[0], n) || !to_int(tokens[1], m) ||
          n < 0 || m < 0) {
        throw ParseError(Kind::kMalformedHeader, line_no,
                         "expected header \"n m\" with non-negative integers");
      }
      have_header = true;
      header_line = line_no;
    } else {
      long long u = 0, v = 0;
      if (tokens.size() != 2 || !to_int(tokens[0], u) || !to_int(tokens[1], v)) {
        throw ParseError(Kind::kMalformedEdge, line_no, "expected edge \"u v\"");
      }
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ParseError(Kind::kOutOfRange, line_no,
                         "endpoint out of range for n=" + std::to_string(n));
      }
      if (u == v) throw ParseError(Kind::kLoop, line_no, "loop at vertex " + std::to_string(u));
      auto key = std::make_pair(static_cast<VertexId>(std::min(u, v)),
                                static_cast<VertexId>(std::max(u, v)));
      if (!seen.insert(key).second) {
        throw ParseError(Kind::kDuplicate, line_no,
                         "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      if (static_cast<long long>(edges.size()) >= m) {
        throw ParseError(Kind::kEdgeCount, line_no,
                         "more edge lines than the header declares");
      }
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    if (end == text.size()) break;
  }
  if (!have_header) {
    throw ParseError(Kind::kMalformedHeader, line_no, "missing header \"n m\"");
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(Kind::kEdgeCount, header_line,
                     "header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    int d = g.degree(v);
    ++h.counts[d];
    h.max_degree = std::max(h.max_degree, d);
  }
  return h;
}

bool is_tree(const Graph& g) {
  return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 &&
         g.is_connected();
}

bool is_two_regular(const Graph& g) {
  if (g.num_vertices() == 0) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

bool is_cycle(const Graph& g) { return is_two_regular(g) && g.is_connected(); }

bool is_path(const Graph& g) {
  return g.num_vertices() >= 2 && is_tree(g) && g.max_degree() <= 2;
}

bool is_cubic(const Graph& g) {
  if (g.num_vertices() == 0) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

std::vector<EdgeId> cycle_edge_order(const Graph& g,
                                     std::span<const VertexId> component) {
  if (component.empty()) return {};
  VertexId start = *std::min_element(component.begin(), component.end());
  for (VertexId v : component) {
    if (g.degree(v) != 2) throw GraphError("cycle_edge_order: vertex of degree != 2");
  }
  std::vector<EdgeId> order;
  auto inc = g.incident(start);
  EdgeId e = std::min(inc[0].edge, inc[1].edge);
  VertexId v = start;
  do {
    order.push_back(e);
    v = g.edge(e).other(v);
    auto next = g.incident(v);
    e = next[0].edge == e ? next[1].edge : next[0].edge;
  } while (v != start);
  return order;
}

std::vector<EdgeId> path_edge_order(const Graph& g) {
  if (!is_path(g)) throw GraphError("path_edge_order: graph is not a path");
  VertexId start = -1;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 1) {
      start = v;
      break;
    }
  }
  std::vector<EdgeId> order;
  VertexId v = start;
  EdgeId prev = kNoEdge;
  while (true) {
    EdgeId next = kNoEdge;
    for (const Incidence& inc : g.incident(v)) {
      if (inc.edge != prev) next = inc.edge;
    }
    if (next == kNoEdge) break;
    order.push_back(next);
    v = g.edge(next).other(v);
    prev = next;
  }
  return order;
}

Graph permute_edges(const Graph& g, std::span<const EdgeId> perm) {
  if (static_cast<int>(perm.size()) != g.num_edges()) {
    throw GraphError("permute_edges: permutation size mismatch");
  }
  std::vector<Edge> edges;
  edges.reserve(perm.size());
  for (EdgeId old : perm) edges.push_back(g.edge(old));
  return Graph(g.num_vertices(), std::move(edges));
}

}  // namespace toucher
