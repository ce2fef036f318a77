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
#include <stdexcept>

#include "segment_machines.h"
#include "toucher/strategies.h"

namespace toucher {

namespace {

using detail::CyclePlan;
using detail::Lane;
using detail::MachineView;
using detail::PathEndMachine;
using detail::SegmentMachine;

class CycleSegmentIsolator : public detail::PlannedIsolator {
 public:
  explicit CycleSegmentIsolator(const Graph& g) {
    if (!is_cycle(g)) throw std::invalid_argument("cycle_segment needs a cycle graph");
    auto comps = g.components();
    ring_ = cycle_edge_order(g, comps.front());
    plan_.emplace(ring_);
  }

  std::string name() const override { return "cycle_segment"; }
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<CycleSegmentIsolator>(*this);
  }

 protected:
  void restart() override { plan_.emplace(ring_); }
  std::optional<EdgeId> respond(const MachineView& view, EdgeId toucher_edge) override {
    return plan_->respond(view, toucher_edge);
  }
  Lane scope(EdgeId toucher_edge) const override { return plan_->segment_edges(toucher_edge); }
  std::string machine_digest() const override { return plan_->digest(); }

 private:
  Lane ring_;
  std::optional<CyclePlan> plan_;
};

// Left-end length by k = (edges mod 16); the right end takes the rest.
int left_end_length(int k) {
  if (k <= 1) return 0;
  if (k <= 6) return 1;
  if (k <= 11) return 2;
  return 6;
}

class PathSegmentIsolator : public detail::PlannedIsolator {
 public:
  explicit PathSegmentIsolator(const Graph& g) {
    if (!is_path(g)) throw std::invalid_argument("path_segment needs a path graph");
    order_ = path_edge_order(g);
    const int m = static_cast<int>(order_.size());
    k_ = m % 16;
    x_ = left_end_length(k_);
    y_ = k_ - x_;
    middle_count_ = (m - k_) / 16;
    pos_of_edge_ = detail::index_positions(order_, g.num_edges());
    restart();
  }

  std::string name() const override { return "path_segment"; }
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<PathSegmentIsolator>(*this);
  }

 protected:
  void restart() override {
    Lane left(order_.begin(), order_.begin() + x_);
    Lane right(order_.rbegin(), order_.rbegin() + y_);
    ends_.emplace(std::move(left), std::move(right), k_);
    middles_.assign(middle_count_, std::nullopt);
  }

  std::optional<EdgeId> respond(const MachineView& view, EdgeId toucher_edge) override {
    const int seg = segment_of(toucher_edge);
    if (seg < 0) return ends_->respond(view, toucher_edge);
    if (!middles_[seg]) {
      Lane frame = middle_edges(seg);
      int t = pos_of_edge_[toucher_edge] - (x_ + 16 * seg);
      if (t >= 8) {
        std::reverse(frame.begin(), frame.end());
        t = 15 - t;
      }
      middles_[seg].emplace(std::move(frame), detail::sixteen_edge_layout(t));
    }
    return middles_[seg]->respond(view);
  }

  Lane scope(EdgeId toucher_edge) const override {
    const int seg = segment_of(toucher_edge);
    if (seg >= 0) return middle_edges(seg);
    const int m = static_cast<int>(order_.size());
    Lane ends(order_.begin(), order_.begin() + x_);
    ends.insert(ends.end(), order_.begin() + (m - y_), order_.end());
    return ends;
  }

  std::string machine_digest() const override {
    std::string out = ends_->digest();
    for (const auto& mid : middles_) out += mid ? "[" + mid->digest() + "]" : "[]";
    return out;
  }

 private:
  // Middle segment index, or -1 for the end segments.
  int segment_of(EdgeId e) const {
    const int pos = pos_of_edge_.at(e);
    if (pos < x_ || pos >= x_ + 16 * middle_count_) return -1;
    return (pos - x_) / 16;
  }

  Lane middle_edges(int seg) const {
    auto first = order_.begin() + x_ + 16 * seg;
    return Lane(first, first + 16);
  }

  Lane order_;
  std::vector<int> pos_of_edge_;
  int k_ = 0;
  int x_ = 0;
  int y_ = 0;
  int middle_count_ = 0;
  std::optional<PathEndMachine> ends_;
  std::vector<std::optional<SegmentMachine>> middles_;
};

}  // namespace

std::unique_ptr<Strategy> cycle_segment_isolator(const Graph& g) {
  return std::make_unique<CycleSegmentIsolator>(g);
}

std::unique_ptr<Strategy> path_segment_isolator(const Graph& g) {
  return std::make_unique<PathSegmentIsolator>(g);
}

}  // namespace toucher
