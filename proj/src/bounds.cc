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

#include "toucher/bounds.h"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace toucher {

namespace {

const std::vector<std::string>& known_families() {
  static const std::vector<std::string> names = {"cycle", "path", "two_regular", "tree", "cubic"};
  return names;
}

std::string compare_name(const Rational& degree_classes, const Rational& danger, bool lower) {
  if (degree_classes == danger) return "equal";
  const bool degree_wins = lower ? degree_classes > danger : degree_classes < danger;
  return degree_wins ? "degree_classes" : "danger_sum";
}

}  // namespace

const BoundEntry& BoundsReport::entry(const std::string& name) const {
  for (const BoundEntry& e : entries) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no bound entry named '" + name + "'");
}

std::int64_t BoundsReport::best_lower() const {
  std::int64_t best = 0;
  for (const BoundEntry& e : entries) {
    if (e.applicable && e.kind == BoundKind::kLower) best = std::max(best, e.tightened);
  }
  return best;
}

std::int64_t BoundsReport::best_upper() const {
  std::optional<std::int64_t> best;
  for (const BoundEntry& e : entries) {
    if (e.applicable && e.kind == BoundKind::kUpper) best = std::min(best.value_or(e.tightened), e.tightened);
  }
  return best.value_or(INT64_MAX);
}

Rational danger_sum(const Graph& g) {
  DyadicValue sum(0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) sum += DyadicValue::pow2_neg(g.degree(v));
  return Rational(sum);
}

Rational refined_upper_bound(const Graph& g) {
  DyadicValue value(0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) value += DyadicValue::pow2_neg(g.degree(v));
  std::vector<bool> used(g.num_vertices(), false);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (used[v]) continue;
    const int dv = g.degree(v);
    std::vector<VertexId> nbrs;
    for (const Incidence& inc : g.incident(v)) {
      if (!used[inc.neighbor]) nbrs.push_back(inc.neighbor);
    }
    std::sort(nbrs.begin(), nbrs.end());
    bool done = false;
    for (VertexId u1 : nbrs) {
      if (done || !(dv < g.degree(u1) - 1)) continue;
      for (VertexId u2 : nbrs) {
        if (u2 == u1 || !(dv < g.degree(u2))) continue;
        value += DyadicValue::pow2_neg(g.degree(u1)) + DyadicValue::pow2_neg(g.degree(u2)) -
                 DyadicValue::pow2_neg(dv);
        used[v] = used[u1] = used[u2] = true;
        done = true;
        break;
      }
    }
  }
  if (value < DyadicValue(0)) return Rational(0);
  return Rational(value);
}

BoundsReport closed_form_bounds(const Graph& g, const std::optional<std::string>& declared_family) {
  if (declared_family &&
      std::find(known_families().begin(), known_families().end(), *declared_family) ==
          known_families().end()) {
    throw std::invalid_argument("unknown declared family '" + *declared_family + "'");
  }
  BoundsReport report;
  const std::int64_t n = g.num_vertices();
  const std::int64_t m = g.num_edges();
  const DegreeHistogram h = degree_histogram(g);
  const std::int64_t d0 = h.count(0), d1 = h.count(1), d2 = h.count(2), d3 = h.count(3);

  const bool tree = is_tree(g) && n > 2;
  const std::vector<std::pair<std::string, bool>> detected = {
      {"cycle", is_cycle(g)},
      {"path", is_path(g)},
      {"two_regular", is_two_regular(g)},
      {"tree", tree},
      {"cubic", is_cubic(g)},
  };
  auto status = [&](const std::string& family) -> std::pair<bool, std::string> {
    if (declared_family && *declared_family == family) return {true, "declared"};
    for (const auto& [name, yes] : detected) {
      if (name == family) return {yes, yes ? "detected " + family : "not " + family};
    }
    return {false, "not " + family};
  };
  for (const auto& [name, yes] : detected) {
    if (yes || (declared_family && *declared_family == name)) report.families.push_back(name);
  }

  auto add = [&](std::string name, BoundKind kind, Rational raw, bool applicable,
                 std::string reason) {
    BoundEntry e{std::move(name), kind, raw, 0, applicable, std::move(reason)};
    e.tightened = kind == BoundKind::kLower ? std::max<std::int64_t>(raw.ceil(), 0) : raw.floor();
    report.entries.push_back(std::move(e));
  };
  auto add_family = [&](const std::string& family, const std::string& name, BoundKind kind,
                        Rational raw) {
    auto [ok, reason] = status(family);
    add(name, kind, raw, ok, reason);
  };

  const Rational deg_lower = Rational(d0) + Rational(d1, 2) - 1;
  const Rational deg_upper = Rational(d0) + Rational(3 * d1, 4) + Rational(d2, 2) + Rational(d3, 4);
  const Rational sum = danger_sum(g);
  const Rational danger_lower = sum - Rational(m + 7, 8);
  add("degree_classes.lower", BoundKind::kLower, deg_lower, true, "any graph");
  add("degree_classes.upper", BoundKind::kUpper, deg_upper, true, "any graph");
  add("danger_sum.lower", BoundKind::kLower, danger_lower, true, "any graph");
  add("danger_sum.upper", BoundKind::kUpper, sum, true, "any graph");
  add("refined.upper", BoundKind::kUpper, refined_upper_bound(g), true, "any graph");

  add_family("cycle", "cycle.lower", BoundKind::kLower, Rational(3 * (n - 3), 16));
  add_family("cycle", "cycle.upper", BoundKind::kUpper, Rational(n, 4));
  add_family("path", "path.lower", BoundKind::kLower, Rational(3 * (n - 2), 16));
  add_family("path", "path.upper", BoundKind::kUpper, Rational(n + 1, 4));
  add_family("two_regular", "two_regular.lower", BoundKind::kLower, Rational(n - 3, 6));
  add_family("two_regular", "two_regular.upper", BoundKind::kUpper, Rational(n, 4));
  add_family("tree", "tree.lower", BoundKind::kLower, Rational(n + 2, 8));
  add_family("tree", "tree.leaf_lower", BoundKind::kLower, Rational(n + d1 - 1, 8));
  add_family("tree", "tree.upper", BoundKind::kUpper, Rational(n - 1, 2));
  add_family("cubic", "cubic.upper", BoundKind::kUpper, Rational(n, 8));

  report.dominant_lower = compare_name(deg_lower, danger_lower, true);
  report.dominant_upper = compare_name(deg_upper, sum, false);
  if (status("tree").first) report.tree_leaf_pair_note = Rational(d1 - 1, 2);
  return report;
}

std::vector<SandwichVerdict> sandwich_check(const Graph& g, int u_exact,
                                            const std::optional<std::string>& declared_family) {
  std::vector<SandwichVerdict> verdicts;
  for (const BoundEntry& e : closed_form_bounds(g, declared_family).entries) {
    if (!e.applicable) continue;
    SandwichVerdict v{e.name, e.kind, e.tightened, false, false};
    v.holds = e.kind == BoundKind::kLower ? e.tightened <= u_exact : u_exact <= e.tightened;
    v.tight = e.tightened == u_exact;
    verdicts.push_back(v);
  }
  return verdicts;
}

std::string bounds_report_json(const BoundsReport& report) {
  nlohmann::json j;
  j["families"] = report.families;
  j["dominant_lower"] = report.dominant_lower;
  j["dominant_upper"] = report.dominant_upper;
  j["tree_leaf_pair_note"] =
      report.tree_leaf_pair_note ? nlohmann::json(report.tree_leaf_pair_note->to_string())
                                 : nlohmann::json(nullptr);
  nlohmann::json entries = nlohmann::json::array();
  for (const BoundEntry& e : report.entries) {
    entries.push_back({{"name", e.name},
                       {"kind", e.kind == BoundKind::kLower ? "lower" : "upper"},
                       {"raw", e.raw.to_string()},
                       {"tightened", e.tightened},
                       {"applicable", e.applicable},
                       {"reason", e.reason}});
  }
  j["entries"] = std::move(entries);
  j["best_lower"] = report.best_lower();
  j["best_upper"] = report.best_upper();
  return j.dump();
}

}  // namespace toucher
