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

// Stateless strategies: the two potential-function players, the leaf
// priority Isolator and the seeded random baseline.

#include <stdexcept>

#include "toucher/strategies.h"

namespace toucher {

namespace {

class MaxDanger : public StatelessStrategy {
 public:
  explicit MaxDanger(Player side) : side_(side) {}

  std::string name() const override { return "max_danger"; }
  Player side() const override { return side_; }
  EdgeId choose(const GameState& s) const override { return max_danger_edge(s); }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<MaxDanger>(*this); }

 private:
  Player side_;
};

class LeafPriority : public StatelessStrategy {
 public:
  explicit LeafPriority(const Graph& g) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      int leaves = (g.degree(g.edge(e).u) == 1) + (g.degree(g.edge(e).v) == 1);
      if (leaves == 2) {
        both_leaves_.push_back(e);
      } else if (leaves == 1) {
        one_leaf_.push_back(e);
      }
    }
  }

  std::string name() const override { return "leaf_priority"; }
  Player side() const override { return Player::kIsolator; }

  EdgeId choose(const GameState& s) const override {
    if (EdgeId e = lowest_free_among(s, both_leaves_); e != kNoEdge) return e;
    if (EdgeId e = lowest_free_among(s, one_leaf_); e != kNoEdge) return e;
    return lowest_free_edge(s);
  }

  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<LeafPriority>(*this);
  }

 private:
  std::vector<EdgeId> both_leaves_;
  std::vector<EdgeId> one_leaf_;
};

// SplitMix64 finaliser: a fixed bijective mixer, identical on every platform.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// The choice at move index k is drawn from a stream keyed on (seed, k), so
// the strategy needs no mutable state and replays exactly.
class RandomStrategy : public StatelessStrategy {
 public:
  RandomStrategy(Player side, std::uint64_t seed) : side_(side), seed_(seed) {}

  std::string name() const override { return "random(" + std::to_string(seed_) + ")"; }
  Player side() const override { return side_; }

  EdgeId choose(const GameState& s) const override {
    const std::uint64_t count = static_cast<std::uint64_t>(s.free_edges());
    if (count == 0) return kNoEdge;
    // Rejection sampling for an unbiased index in [0, count).
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % count;
    std::uint64_t state = mix(seed_) ^ mix(static_cast<std::uint64_t>(s.moves_made()) + 1);
    std::uint64_t draw = 0;
    do {
      state = mix(state);
      draw = state;
    } while (draw >= limit);
    std::uint64_t index = draw % count;
    for (EdgeId e = 0; e < s.graph().num_edges(); ++e) {
      if (s.is_free(e) && index-- == 0) return e;
    }
    return kNoEdge;
  }

  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<RandomStrategy>(*this);
  }

 private:
  Player side_;
  std::uint64_t seed_;
};

}  // namespace

std::unique_ptr<Strategy> max_danger_toucher() {
  return std::make_unique<MaxDanger>(Player::kToucher);
}

std::unique_ptr<Strategy> max_danger_isolator() {
  return std::make_unique<MaxDanger>(Player::kIsolator);
}

std::unique_ptr<Strategy> leaf_priority_isolator(const Graph& g) {
  return std::make_unique<LeafPriority>(g);
}

std::unique_ptr<Strategy> random_strategy(Player side, std::uint64_t seed) {
  return std::make_unique<RandomStrategy>(side, seed);
}

}  // namespace toucher
