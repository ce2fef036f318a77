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

#include "toucher/strategy.h"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "toucher/strategies.h"

namespace toucher {

EdgeId lowest_free_edge(const GameState& s) {
  for (EdgeId e = 0; e < s.graph().num_edges(); ++e) {
    if (s.is_free(e)) return e;
  }
  return kNoEdge;
}

EdgeId lowest_free_among(const GameState& s, std::span<const EdgeId> edges) {
  EdgeId best = kNoEdge;
  for (EdgeId e : edges) {
    if (s.is_free(e) && (best == kNoEdge || e < best)) best = e;
  }
  return best;
}

EdgeId select_max_danger_edge(const GameState& s, std::span<const DyadicValue> vertex_danger,
                              std::span<const EdgeId> candidates) {
  const Graph& g = s.graph();
  EdgeId best = kNoEdge;
  DyadicValue best_sum(0);
  auto consider = [&](EdgeId e) {
    if (!s.is_free(e)) return;
    const Edge& ed = g.edge(e);
    DyadicValue sum = vertex_danger[ed.u] + vertex_danger[ed.v];
    if (best == kNoEdge || sum > best_sum || (sum == best_sum && e < best)) {
      best = e;
      best_sum = sum;
    }
  };
  if (candidates.empty()) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) consider(e);
  } else {
    for (EdgeId e : candidates) consider(e);
  }
  return best;
}

EdgeId max_danger_edge(const GameState& s, std::span<const EdgeId> candidates) {
  std::vector<DyadicValue> d;
  d.reserve(s.graph().num_vertices());
  for (VertexId v = 0; v < s.graph().num_vertices(); ++v) d.push_back(danger(s, v));
  return select_max_danger_edge(s, d, candidates);
}

namespace {

std::string trim(std::string_view text) {
  size_t b = 0;
  size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

std::uint64_t parse_seed(const std::string& text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("random: seed must be a non-negative integer, got '" + text +
                                "'");
  }
  return value;
}

void require_side(const std::string& name, Player wanted, Player side) {
  if (wanted != side) {
    throw std::invalid_argument("strategy '" + name + "' plays " + player_name(wanted) +
                                ", not " + player_name(side));
  }
}

void require_args(const StrategySpec& spec, size_t max_args) {
  if (spec.args.size() > max_args) {
    throw std::invalid_argument("strategy '" + spec.name + "' takes at most " +
                                std::to_string(max_args) + " argument(s)");
  }
}

}  // namespace

StrategySpec parse_strategy_spec(std::string_view text) {
  std::string t = trim(text);
  StrategySpec spec;
  auto open = t.find('(');
  if (open == std::string::npos) {
    spec.name = t;
  } else {
    if (t.back() != ')') throw std::invalid_argument("strategy spec '" + t + "': missing ')'");
    spec.name = trim(std::string_view(t).substr(0, open));
    std::string inner = t.substr(open + 1, t.size() - open - 2);
    if (!trim(inner).empty()) {
      size_t start = 0;
      while (true) {
        auto comma = inner.find(',', start);
        spec.args.push_back(trim(std::string_view(inner).substr(
            start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  }
  if (spec.name.empty()) throw std::invalid_argument("empty strategy name");
  return spec;
}

std::unique_ptr<Strategy> make_strategy(std::string_view text, Player side, const Graph& g) {
  StrategySpec spec = parse_strategy_spec(text);
  const std::string& n = spec.name;
  if (n == "max_danger") {
    require_args(spec, 0);
    return side == Player::kToucher ? max_danger_toucher() : max_danger_isolator();
  }
  if (n == "random") {
    if (spec.args.size() != 1) throw std::invalid_argument("random takes exactly one seed");
    return random_strategy(side, parse_seed(spec.args[0]));
  }
  if (n == "pairing") {
    require_side(n, Player::kToucher, side);
    require_args(spec, 1);
    PairingVariant variant = PairingVariant::kIncoming;
    if (!spec.args.empty()) {
      if (spec.args[0] == "out") {
        variant = PairingVariant::kOutgoing;
      } else if (spec.args[0] != "in") {
        throw std::invalid_argument("pairing variant must be 'in' or 'out'");
      }
    }
    return pairing_toucher(g, variant);
  }
  if (n == "k4_components") {
    require_side(n, Player::kToucher, side);
    require_args(spec, 0);
    return k4_components_toucher(g);
  }
  if (n == "c3_components") {
    require_side(n, Player::kToucher, side);
    require_args(spec, 0);
    return c3_components_toucher(g);
  }
  if (n == "leaf_priority") {
    require_side(n, Player::kIsolator, side);
    require_args(spec, 0);
    return leaf_priority_isolator(g);
  }
  if (n == "cycle_segment") {
    require_side(n, Player::kIsolator, side);
    require_args(spec, 0);
    return cycle_segment_isolator(g);
  }
  if (n == "path_segment") {
    require_side(n, Player::kIsolator, side);
    require_args(spec, 0);
    return path_segment_isolator(g);
  }
  if (n == "two_regular") {
    require_side(n, Player::kIsolator, side);
    require_args(spec, 0);
    return two_regular_isolator(g);
  }
  throw std::invalid_argument("unknown strategy '" + n + "'");
}

std::vector<std::string> strategy_names() {
  return {"max_danger",    "random(seed)",  "pairing[(out)]", "k4_components", "c3_components",
          "leaf_priority", "cycle_segment", "path_segment",   "two_regular"};
}

}  // namespace toucher
