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

// Isolator on a disjoint union of cycles. Cycles of length 4, 5 or 0 mod 6
// are played like single cycles with the segment plan. The others are
// paired in component order: when Toucher first enters one member of a
// pair, Isolator opens the partner, so that Toucher has effectively moved
// twice in the first cycle and Isolator first in the second. An unpaired
// cycle is played as one where Toucher moved first twice.

#include <stdexcept>

#include "segment_machines.h"
#include "toucher/strategies.h"

namespace toucher {

namespace {

using detail::CyclePlan;
using detail::FirstMoverCycleMachine;
using detail::Lane;
using detail::MachineView;
using detail::TwiceFirstCycleMachine;

class TwoRegularIsolator : public detail::PlannedIsolator {
 public:
  explicit TwoRegularIsolator(const Graph& g) {
    if (!is_two_regular(g)) throw std::invalid_argument("two_regular needs a 2-regular graph");
    component_of_edge_.assign(g.num_edges(), -1);
    int pending_partner = -1;
    for (const auto& comp : g.components()) {
      Cycle c;
      c.ring = cycle_edge_order(g, comp);
      const int len = static_cast<int>(c.ring.size());
      const int index = static_cast<int>(cycles_.size());
      for (EdgeId e : c.ring) component_of_edge_[e] = index;
      const int residue = len % 6;
      if (residue == 4 || residue == 5 || residue == 0) {
        c.kind = Kind::kSegments;
      } else if (pending_partner < 0) {
        pending_partner = index;
        c.kind = Kind::kLeftover;
      } else {
        c.kind = Kind::kPaired;
        c.partner = pending_partner;
        cycles_[pending_partner].kind = Kind::kPaired;
        cycles_[pending_partner].partner = index;
        pending_partner = -1;
      }
      cycles_.push_back(std::move(c));
    }
    restart();
  }

  std::string name() const override { return "two_regular"; }
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<TwoRegularIsolator>(*this);
  }

 protected:
  void restart() override {
    for (Cycle& c : cycles_) {
      c.role = Role::kFresh;
      c.plan.reset();
      c.twice_first.reset();
      c.first_mover.reset();
      if (c.kind == Kind::kSegments) c.plan.emplace(c.ring);
      if (c.kind == Kind::kLeftover) {
        c.role = Role::kTwiceFirst;
        c.twice_first.emplace(c.ring);
      }
    }
  }

  std::optional<EdgeId> respond(const MachineView& view, EdgeId toucher_edge) override {
    Cycle& c = cycles_[component_of_edge_.at(toucher_edge)];
    switch (c.kind) {
      case Kind::kSegments:
        return c.plan->respond(view, toucher_edge);
      case Kind::kLeftover:
        return c.twice_first->respond(view, toucher_edge);
      case Kind::kPaired:
        break;
    }
    if (c.role == Role::kFresh) {
      Cycle& partner = cycles_[c.partner];
      c.role = Role::kTwiceFirst;
      c.twice_first.emplace(c.ring);
      c.twice_first->respond(view, toucher_edge);  // anchors the sections
      partner.role = Role::kFirstMover;
      partner.first_mover.emplace(partner.ring);
      return partner.first_mover->open();
    }
    if (c.role == Role::kTwiceFirst) return c.twice_first->respond(view, toucher_edge);
    return c.first_mover->respond(view, toucher_edge);
  }

  Lane scope(EdgeId toucher_edge) const override {
    const Cycle& c = cycles_[component_of_edge_.at(toucher_edge)];
    if (c.kind == Kind::kSegments) return c.plan->segment_edges(toucher_edge);
    return c.ring;
  }

  std::string machine_digest() const override {
    std::string out;
    for (const Cycle& c : cycles_) {
      out += std::to_string(static_cast<int>(c.role)) + ':';
      if (c.plan) out += c.plan->digest();
      if (c.twice_first) out += c.twice_first->digest();
      if (c.first_mover) out += c.first_mover->digest();
      out += ';';
    }
    return out;
  }

 private:
  enum class Kind : std::uint8_t { kSegments, kPaired, kLeftover };
  enum class Role : std::uint8_t { kFresh, kTwiceFirst, kFirstMover };

  struct Cycle {
    Lane ring;
    Kind kind = Kind::kSegments;
    int partner = -1;
    Role role = Role::kFresh;
    std::optional<CyclePlan> plan;
    std::optional<TwiceFirstCycleMachine> twice_first;
    std::optional<FirstMoverCycleMachine> first_mover;
  };

  std::vector<int> component_of_edge_;
  std::vector<Cycle> cycles_;
};

}  // namespace

std::unique_ptr<Strategy> two_regular_isolator(const Graph& g) {
  return std::make_unique<TwoRegularIsolator>(g);
}

}  // namespace toucher
