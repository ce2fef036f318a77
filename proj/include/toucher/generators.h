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

#ifndef TOUCHER_GENERATORS_H_
#define TOUCHER_GENERATORS_H_

#include <string>
#include <string_view>
#include <vector>

#include "toucher/graph.h"

namespace toucher {

// Graph families with documented, deterministic numbering.
//
//   cycle(n), n >= 3          edge i = {i, (i+1) mod n}
//   path(n), n >= 1           edge i = {i, i+1}
//   star(n), n >= 2           centre 0, edge i = {0, i+1}
//   k2_components(c)          edge i = {2i, 2i+1}
//   p3_components_plus_p2(x)  P3 number j on 3j,3j+1,3j+2 with edges
//                             {3j,3j+1},{3j+1,3j+2}; the P2 {3x,3x+1} last
//   c3_components(c)          triangle j on 3j..3j+2: {a,a+1},{a+1,a+2},{a+2,a}
//   c4_components(c)          4-cycle j on 4j..4j+3 in cyclic order
//   k4_components(c)          K4 j on 4j..4j+3, edges in lexicographic order
//   circulant(n, offsets)     for each offset s (in the given order) and each
//                             i ascending, edge {i, (i+s) mod n}; an offset of
//                             n/2 contributes only i < n/2
//   gadget24()                see below
//
// gadget24 is three copies of an 8-vertex block. Block b owns vertices
// 8b..8b+7 labelled v1,v2,v3,v4,v5,u1,u2,u3 in that order. Block edges, in
// id order: v1v2, v2v5, v5v3, v3v4, v4v1 (outer 5-cycle), u1u2, u2u3, u3u1
// (inner triangle), u1v3, u2v1, u3v2 (spokes). v4 and v5 are the two ports
// of each block. The three connectors are appended last:
//   e12 = {H1.v4, H2.v4}, e13 = {H1.v5, H3.v5}, e23 = {H2.v5, H3.v4}.
// Block edges of block b are ids 11b..11b+10; connectors are 33, 34, 35.
struct FamilySpec {
  std::string family;
  int n = 0;                 // cycle, path, star, circulant
  int count = 0;             // *_components (c), p3_components_plus_p2 (x)
  std::vector<int> offsets;  // circulant
};

Graph generate(const FamilySpec& spec);

// Convenience wrappers.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);
Graph k2_components(int c);
Graph p3_components_plus_p2(int x);
Graph c3_components(int c);
Graph c4_components(int c);
Graph k4_components(int c);
Graph circulant_graph(int n, std::vector<int> offsets);
Graph gadget24();

// Vertex/edge labels of the gadget block, for tests and traces.
struct GadgetBlock {
  VertexId v1, v2, v3, v4, v5, u1, u2, u3;
  EdgeId v1v2, v2v5, v5v3, v3v4, v4v1, u1u2, u2u3, u3u1, u1v3, u2v1, u3v2;
};
GadgetBlock gadget_block(int block);
inline constexpr EdgeId kGadgetE12 = 33;
inline constexpr EdgeId kGadgetE13 = 34;
inline constexpr EdgeId kGadgetE23 = 35;

// Families that take a single size parameter `n` (as opposed to a count).
bool family_uses_n(std::string_view family);
std::vector<std::string> family_names();

}  // namespace toucher

#endif  // TOUCHER_GENERATORS_H_
