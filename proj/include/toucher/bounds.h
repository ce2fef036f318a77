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

#ifndef TOUCHER_BOUNDS_H_
#define TOUCHER_BOUNDS_H_

#include <optional>
#include <string>
#include <vector>

#include "toucher/graph.h"
#include "toucher/rational.h"

namespace toucher {

enum class BoundKind { kLower, kUpper };

// One closed-form bound. `tightened` is ceil(raw) (never below 0) for lower
// bounds and floor(raw) for upper bounds.
struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::kLower;
  Rational raw;
  std::int64_t tightened = 0;
  bool applicable = false;
  std::string reason;
};

// Entry names:
//   degree_classes.{lower,upper}  from the counts of degree-0..3 vertices
//   danger_sum.{lower,upper}      from the initial total danger
//   refined.upper                 danger sum after vertex-pair refinement
//   cycle.{lower,upper}, path.{lower,upper}, two_regular.{lower,upper}
//   tree.lower, tree.leaf_lower, tree.upper, cubic.upper
struct BoundsReport {
  std::vector<BoundEntry> entries;
  // Structural classes detected (or declared): "cycle", "path",
  // "two_regular", "tree", "cubic".
  std::vector<std::string> families;
  // Which of degree_classes / danger_sum gives the stronger bound, or
  // "equal".
  std::string dominant_lower;
  std::string dominant_upper;
  // Reported, never asserted: (leaves - 1) / 2 for trees.
  std::optional<Rational> tree_leaf_pair_note;

  const BoundEntry& entry(const std::string& name) const;
  // Strongest applicable bounds (0 / n when none apply).
  std::int64_t best_lower() const;
  std::int64_t best_upper() const;
};

// Families accepted as declarations: cycle, path, two_regular, tree, cubic.
BoundsReport closed_form_bounds(const Graph& g,
                            const std::optional<std::string>& declared_family = std::nullopt);

// Initial total danger, sum over v of 2^-d(v).
Rational danger_sum(const Graph& g);

// Danger sum reduced greedily (ascending vertex id) at vertices v with two
// unused neighbours u1, u2 such that d(v) < d(u1) - 1 and d(v) < d(u2); each
// vertex is used at most once. Never below 0.
Rational refined_upper_bound(const Graph& g);

struct SandwichVerdict {
  std::string name;
  BoundKind kind = BoundKind::kLower;
  std::int64_t tightened = 0;
  bool holds = false;
  bool tight = false;
};

// One verdict per applicable entry of closed_form_bounds(g, declared_family).
std::vector<SandwichVerdict> sandwich_check(
    const Graph& g, int u_exact, const std::optional<std::string>& declared_family = std::nullopt);

// Single JSON object; raw values as "num/den" strings.
std::string bounds_report_json(const BoundsReport& report);

}  // namespace toucher

#endif  // TOUCHER_BOUNDS_H_
