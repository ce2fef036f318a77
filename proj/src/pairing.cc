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

#include <algorithm>

#include "toucher/strategies.h"

namespace toucher {

PairingPlan build_pairing_plan(const Graph& g, PairingVariant variant) {
  PairingPlan plan;
  plan.variant = variant;
  plan.orientation = eulerian_orientation(g);
  // The outgoing variant is the incoming construction on the reversed
  // orientation; `orientation` keeps the original direction for reporting.
  const Orientation chosen = variant == PairingVariant::kIncoming
                                 ? plan.orientation
                                 : plan.orientation.reversed();
  plan.partner.assign(g.num_edges(), kNoEdge);
  auto add_pair = [&](EdgeId a, EdgeId b) {
    plan.pairs.emplace_back(std::min(a, b), std::max(a, b));
    plan.partner[a] = b;
    plan.partner[b] = a;
  };

  std::vector<EdgeId> pool;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::vector<EdgeId> in = chosen.incoming(v);
    if (in.size() >= 2) {
      add_pair(in[0], in[1]);
      plan.dedicated.push_back(v);
    } else if (in.size() == 1 && g.degree(v) <= 3) {
      pool.push_back(in[0]);
      plan.pooled.push_back(v);
    }
  }
  std::sort(pool.begin(), pool.end());
  size_t i = 0;
  for (; i + 1 < pool.size(); i += 2) add_pair(pool[i], pool[i + 1]);
  if (i < pool.size()) plan.forced_first = pool[i];
  std::sort(plan.pairs.begin(), plan.pairs.end());
  return plan;
}

int pairing_guarantee(const Graph& g, const PairingPlan& plan) {
  const int unprotected = g.num_vertices() - static_cast<int>(plan.dedicated.size()) -
                          static_cast<int>(plan.pooled.size());
  return unprotected + static_cast<int>(plan.pooled.size()) / 2;
}

namespace {

// Stateless: under alternating play at most one pair is ever half-taken by
// Isolator with a free partner when Toucher is to move, so "answer the
// threatened pair" coincides with "answer Isolator's last move".
class PairingToucher : public StatelessStrategy {
 public:
  PairingToucher(const Graph& g, PairingVariant variant)
      : plan_(build_pairing_plan(g, variant)) {}

  std::string name() const override {
    return plan_.variant == PairingVariant::kIncoming ? "pairing" : "pairing(out)";
  }
  Player side() const override { return Player::kToucher; }

  EdgeId choose(const GameState& s) const override {
    for (const auto& [a, b] : plan_.pairs) {
      if (s.owner(a) == Owner::kIsolator && s.is_free(b)) return b;
      if (s.owner(b) == Owner::kIsolator && s.is_free(a)) return a;
    }
    if (plan_.forced_first != kNoEdge && s.is_free(plan_.forced_first)) {
      return plan_.forced_first;
    }
    return lowest_free_edge(s);
  }

  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<PairingToucher>(*this);
  }

 private:
  PairingPlan plan_;
};

}  // namespace

std::unique_ptr<Strategy> pairing_toucher(const Graph& g, PairingVariant variant) {
  return std::make_unique<PairingToucher>(g, variant);
}

}  // namespace toucher
