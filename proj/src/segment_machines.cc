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

#include "segment_machines.h"

#include <algorithm>
#include <array>

namespace toucher::detail {

namespace {

std::string join_digest(std::initializer_list<int> values) {
  std::string out;
  for (int v : values) {
    out += std::to_string(v);
    out += ',';
  }
  return out;
}

// Lower edge id of two optional candidates.
std::optional<EdgeId> lower_of(std::optional<EdgeId> a, std::optional<EdgeId> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

std::string pack_bits(const std::vector<std::uint8_t>& bits) {
  std::string out((bits.size() + 7) / 8, '\0');
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] = static_cast<char>(out[i / 8] | (1 << (i % 8)));
  }
  return out;
}

Lane slice(const Lane& frame, Range r) {
  r.begin = std::clamp(r.begin, 0, static_cast<int>(frame.size()));
  r.end = std::clamp(r.end, r.begin, static_cast<int>(frame.size()));
  return Lane(frame.begin() + r.begin, frame.begin() + r.end);
}

std::vector<int> index_positions(const Lane& lane, int num_edges) {
  std::vector<int> pos(num_edges, -1);
  for (int i = 0; i < static_cast<int>(lane.size()); ++i) pos.at(lane[i]) = i;
  return pos;
}

// ---------------------------------------------------------------------------
// StringGrower

std::optional<EdgeId> StringGrower::next(const MachineView& view) {
  if (finished_) return std::nullopt;
  const int size = static_cast<int>(lane_.size());
  if (lo_ < 0) {
    const int centre = size / 2;
    if (size == 0 || !view.free(lane_[centre])) {
      finished_ = true;
      return std::nullopt;
    }
    lo_ = hi_ = centre;
    return lane_[centre];
  }
  std::optional<EdgeId> left;
  std::optional<EdgeId> right;
  if (lo_ > 0 && view.free(lane_[lo_ - 1])) left = lane_[lo_ - 1];
  if (hi_ + 1 < size && view.free(lane_[hi_ + 1])) right = lane_[hi_ + 1];
  std::optional<EdgeId> pick = lower_of(left, right);
  if (!pick) {
    finished_ = true;
    return std::nullopt;
  }
  if (pick == left) {
    --lo_;
  } else {
    ++hi_;
  }
  return pick;
}

std::string StringGrower::digest() const { return join_digest({lo_, hi_, finished_ ? 1 : 0}); }

// ---------------------------------------------------------------------------
// TripleSeeker

std::optional<EdgeId> TripleSeeker::next(const MachineView& view) {
  if (lane_ < 0) {
    for (int li = 0; li < static_cast<int>(lanes_.size()) && lane_ < 0; ++li) {
      const Lane& lane = lanes_[li];
      for (int s = 0; s + 2 < static_cast<int>(lane.size()); ++s) {
        EdgeId a = lane[s], b = lane[s + 1], c = lane[s + 2];
        if (view.toucher(a) || view.toucher(b) || view.toucher(c)) continue;
        if (require_free_ && !(view.free(a) && view.free(b) && view.free(c))) continue;
        if (view.mine(b) && (view.mine(a) || view.mine(c))) continue;
        lane_ = li;
        start_ = s;
        break;
      }
    }
    if (lane_ < 0) return std::nullopt;
  }
  const Lane& lane = lanes_[lane_];
  EdgeId a = lane[start_], b = lane[start_ + 1], c = lane[start_ + 2];
  if (view.mine(b)) {
    if (view.mine(a) || view.mine(c)) return std::nullopt;
    std::optional<EdgeId> left = view.free(a) ? std::optional<EdgeId>(a) : std::nullopt;
    std::optional<EdgeId> right = view.free(c) ? std::optional<EdgeId>(c) : std::nullopt;
    return lower_of(left, right);
  }
  if (view.free(b)) return b;
  return std::nullopt;
}

bool TripleSeeker::complete(const MachineView& view) const {
  if (lane_ < 0) return false;
  const Lane& lane = lanes_[lane_];
  return view.mine(lane[start_ + 1]) && (view.mine(lane[start_]) || view.mine(lane[start_ + 2]));
}

std::string TripleSeeker::digest() const { return join_digest({lane_, start_}); }

// ---------------------------------------------------------------------------
// Layouts

SegmentLayout sixteen_edge_layout(int t) {
  if (t < 0 || t > 7) throw std::out_of_range("sixteen_edge_layout: t must be in 0..7");
  SegmentLayout l;
  l.target = 3;
  if (t <= 2) {
    l.first_string = Range{3, 8};
    l.second_string = Range{8, 13};
    l.triple_after_short = {Range{13, 16}};
    l.triple_after_three = {Range{7, 16}};
  } else if (t <= 4) {
    l.first_string = Range{5, 10};
    l.second_string = Range{10, 15};
    l.triple_after_short = {Range{0, 3}};
    l.triple_after_three = {Range{10, 16}, Range{0, 3}};
  } else if (t == 5) {
    l.first_string = Range{0, 5};
    l.second_string = Range{10, 15};
    l.triple_after_short = {Range{6, 10}};
    l.triple_after_three = {Range{10, 16}, Range{6, 10}};
  } else {
    l.first_string = Range{8, 13};
    l.second_string = Range{0, 5};
    l.triple_after_short = {Range{13, 16}};
    l.triple_after_three = {Range{0, 6}, Range{13, 16}};
  }
  return l;
}

SegmentLayout leftover_layout(int k) {
  if (k < 1 || k > 16) throw std::out_of_range("leftover_layout: k must be in 1..16");
  SegmentLayout l;
  const int free_end = k - 1;  // position k-1 holds Toucher's first edge
  if (k <= 3) {
    l.target = 0;
  } else if (k <= 8) {
    l.target = 1;
    l.triple_after_short = {Range{0, free_end}};
  } else if (k <= 13) {
    l.target = 2;
    l.first_string = Range{0, 5};
    l.triple_after_short = {Range{5, free_end}};
  } else {
    l.target = 3;
    l.first_string = Range{0, 5};
    l.second_string = Range{5, 10};
    l.triple_after_short = {Range{10, free_end}};
    l.triple_after_three = {Range{4, free_end}};
  }
  return l;
}

// ---------------------------------------------------------------------------
// SegmentMachine

SegmentMachine::SegmentMachine(Lane frame, SegmentLayout layout)
    : frame_(std::move(frame)), layout_(std::move(layout)) {
  if (layout_.target <= 0) {
    phase_ = Phase::kDone;
  } else if (layout_.first_string) {
    grower_.emplace(slice(frame_, *layout_.first_string));
    phase_ = Phase::kFirst;
  } else {
    start_triple(layout_.triple_after_short);
  }
}

void SegmentMachine::start_triple(const std::vector<Range>& regions) {
  std::vector<Lane> lanes;
  for (Range r : regions) lanes.push_back(slice(frame_, r));
  seeker_.emplace(std::move(lanes), false);
  phase_ = Phase::kTriple;
}

void SegmentMachine::after_string(int length, bool was_first) {
  banked_ += std::max(length - 1, 0);
  grower_.reset();
  if (banked_ >= layout_.target) {
    phase_ = Phase::kDone;
  } else if (was_first && length >= 3) {
    start_triple(layout_.triple_after_three);
  } else if (was_first && layout_.second_string) {
    grower_.emplace(slice(frame_, *layout_.second_string));
    phase_ = Phase::kSecond;
  } else {
    start_triple(layout_.triple_after_short);
  }
}

std::optional<EdgeId> SegmentMachine::respond(const MachineView& view) {
  while (true) {
    switch (phase_) {
      case Phase::kFirst:
      case Phase::kSecond: {
        if (auto e = grower_->next(view)) return e;
        after_string(grower_->length(), phase_ == Phase::kFirst);
        break;
      }
      case Phase::kTriple: {
        if (auto e = seeker_->next(view)) return e;
        if (seeker_->complete(view)) ++banked_;
        seeker_.reset();
        phase_ = Phase::kDone;
        break;
      }
      case Phase::kDone:
        return std::nullopt;
    }
  }
}

std::string SegmentMachine::digest() const {
  std::string out = join_digest({static_cast<int>(phase_), banked_});
  if (grower_) out += "g" + grower_->digest();
  if (seeker_) out += "t" + seeker_->digest();
  return out;
}

// ---------------------------------------------------------------------------
// CyclePlan

CyclePlan::CyclePlan(Lane ring) : ring_(std::move(ring)) {
  int max_id = ring_.empty() ? 0 : *std::max_element(ring_.begin(), ring_.end());
  pos_of_edge_ = index_positions(ring_, max_id + 1);
}

bool CyclePlan::owns(EdgeId e) const {
  return e >= 0 && e < static_cast<int>(pos_of_edge_.size()) && pos_of_edge_[e] >= 0;
}

int CyclePlan::position(EdgeId e) const { return pos_of_edge_.at(e); }

int CyclePlan::segment_of(int pos) const {
  const int n = static_cast<int>(ring_.size());
  const int offset = ((pos - anchor_ - 1) % n + n) % n;
  const int full = static_cast<int>(segments_.size()) - 1;
  return offset < 16 * full ? 1 + offset / 16 : 0;
}

std::optional<EdgeId> CyclePlan::respond(const MachineView& view, EdgeId toucher_edge) {
  const int n = static_cast<int>(ring_.size());
  const int q = position(toucher_edge);
  if (anchor_ < 0) {
    anchor_ = q;
    const int full = (n - 1) / 16;
    leftover_ = n - 16 * full;
    segments_.assign(full + 1, Lane{});
    for (int i = 0; i < leftover_; ++i) {
      segments_[0].push_back(ring_[((q - leftover_ + 1 + i) % n + n) % n]);
    }
    for (int j = 1; j <= full; ++j) {
      for (int i = 0; i < 16; ++i) segments_[j].push_back(ring_[(q + 1 + 16 * (j - 1) + i) % n]);
    }
    machines_.assign(full + 1, std::nullopt);
    if (leftover_ >= 4) machines_[0].emplace(segments_[0], leftover_layout(leftover_));
    return machines_[0] ? machines_[0]->respond(view) : std::nullopt;
  }
  const int s = segment_of(q);
  if (s >= 1 && !machines_[s]) {
    Lane frame = segments_[s];
    int t = static_cast<int>(std::find(frame.begin(), frame.end(), toucher_edge) - frame.begin());
    if (t >= 8) {
      std::reverse(frame.begin(), frame.end());
      t = 15 - t;
    }
    machines_[s].emplace(std::move(frame), sixteen_edge_layout(t));
  }
  return machines_[s] ? machines_[s]->respond(view) : std::nullopt;
}

Lane CyclePlan::segment_edges(EdgeId e) const {
  if (anchor_ < 0 || !owns(e)) return ring_;
  return segments_[segment_of(position(e))];
}

std::string CyclePlan::digest() const {
  std::string out = join_digest({anchor_});
  for (size_t i = 0; i < machines_.size(); ++i) {
    out += machines_[i] ? "[" + machines_[i]->digest() + "]" : "[]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// PathEndMachine

bool PathEndMachine::owns(EdgeId e) const {
  return std::find(left_.begin(), left_.end(), e) != left_.end() ||
         std::find(right_.begin(), right_.end(), e) != right_.end();
}

std::optional<EdgeId> PathEndMachine::triple(const MachineView& view, std::vector<Lane> lanes) {
  seeker_.emplace(std::move(lanes), true);
  phase_ = Phase::kTriple;
  return seeker_->next(view);
}

std::optional<EdgeId> PathEndMachine::respond(const MachineView& view, EdgeId toucher_edge) {
  auto free_at = [&](const Lane& lane, size_t i) -> std::optional<EdgeId> {
    if (i < lane.size() && view.free(lane[i])) return lane[i];
    return std::nullopt;
  };
  auto tail = [](const Lane& lane, size_t from) {
    return from < lane.size() ? Lane(lane.begin() + from, lane.end()) : Lane{};
  };
  if (k_ <= 1) return std::nullopt;
  switch (phase_) {
    case Phase::kIdle: {
      a_is_left_ = std::find(left_.begin(), left_.end(), toucher_edge) != left_.end();
      phase_ = k_ <= 6 ? Phase::kDone : Phase::kAfterLeaf;
      return free_at(b(), 0);
    }
    case Phase::kAfterLeaf: {
      if (k_ <= 11) {
        phase_ = Phase::kDone;
        if (auto e = free_at(b(), 1)) return e;
        if (auto e = free_at(a(), 0)) return e;
        return triple(view, {b(), a()});
      }
      const bool both_blocked =
          b().size() > 1 && view.toucher(b()[1]) && !a().empty() && view.toucher(a()[0]);
      if (both_blocked && a().size() >= 6) {
        grower_.emplace(Lane(a().begin() + 1, a().begin() + 6));
        phase_ = Phase::kString;
        if (auto e = grower_->next(view)) return e;
        return triple(view, {tail(b(), 2), tail(a(), 6)});
      }
      if (auto e = free_at(b(), 1)) {
        phase_ = Phase::kTookB2;
        return e;
      }
      if (auto e = free_at(a(), 0)) {
        phase_ = Phase::kTookA1;
        return e;
      }
      return triple(view, {b(), a()});
    }
    case Phase::kString: {
      if (auto e = grower_->next(view)) return e;
      // The B leaf plus the string's internal vertices.
      if (grower_->length() >= 3) {
        phase_ = Phase::kDone;
        return std::nullopt;
      }
      return triple(view, {tail(b(), 2), tail(a(), 6)});
    }
    case Phase::kTookB2: {
      phase_ = Phase::kDone;
      if (auto e = free_at(b(), 2)) return e;
      if (auto e = free_at(a(), 0)) return e;
      return triple(view, {b(), a()});
    }
    case Phase::kTookA1: {
      phase_ = Phase::kDone;
      if (auto e = free_at(a(), 1)) return e;
      if (auto e = free_at(b(), 1)) return e;
      return triple(view, {b(), a()});
    }
    case Phase::kTriple:
      return seeker_->next(view);
    case Phase::kDone:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string PathEndMachine::digest() const {
  std::string out = join_digest({static_cast<int>(phase_), a_is_left_ ? 1 : 0});
  if (grower_) out += "g" + grower_->digest();
  if (seeker_) out += "t" + seeker_->digest();
  return out;
}

// ---------------------------------------------------------------------------
// TwiceFirstCycleMachine

TwiceFirstCycleMachine::TwiceFirstCycleMachine(Lane ring) : ring_(std::move(ring)) {
  int max_id = ring_.empty() ? 0 : *std::max_element(ring_.begin(), ring_.end());
  pos_of_edge_ = index_positions(ring_, max_id + 1);
}

std::optional<EdgeId> TwiceFirstCycleMachine::complete_pending(const MachineView& view) const {
  const int n = static_cast<int>(ring_.size());
  const int sections = (n - 1) / 6;
  for (int j = 0; j < 2 * sections; ++j) {
    const int first = anchor_ + 1 + 3 * j;
    EdgeId a = ring_[first % n], b = ring_[(first + 1) % n], c = ring_[(first + 2) % n];
    if (!view.mine(b) || view.mine(a) || view.mine(c)) continue;
    std::optional<EdgeId> left = view.free(a) ? std::optional<EdgeId>(a) : std::nullopt;
    std::optional<EdgeId> right = view.free(c) ? std::optional<EdgeId>(c) : std::nullopt;
    if (auto e = lower_of(left, right)) return e;
  }
  return std::nullopt;
}

std::optional<EdgeId> TwiceFirstCycleMachine::respond(const MachineView& view,
                                                      EdgeId toucher_edge) {
  const int n = static_cast<int>(ring_.size());
  const int q = pos_of_edge_.at(toucher_edge);
  if (anchor_ < 0) {
    anchor_ = q;
    return std::nullopt;
  }
  const int sections = (n - 1) / 6;
  const int offset = ((q - anchor_) % n + n) % n;
  if (offset >= 1 && offset <= 6 * sections) {
    const int j = (offset - 1) / 6;
    const bool in_first = (offset - 1) % 6 < 3;
    auto seg = [&](bool first_half) {
      const int start = anchor_ + 1 + 6 * j + (first_half ? 0 : 3);
      return std::array<EdgeId, 3>{ring_[start % n], ring_[(start + 1) % n],
                                   ring_[(start + 2) % n]};
    };
    const std::array<EdgeId, 3> here = seg(in_first);
    const std::array<EdgeId, 3> other = seg(!in_first);
    for (const auto& s : {here, other}) {
      if (!view.mine(s[1]) || view.mine(s[0]) || view.mine(s[2])) continue;
      std::optional<EdgeId> left = view.free(s[0]) ? std::optional<EdgeId>(s[0]) : std::nullopt;
      std::optional<EdgeId> right = view.free(s[2]) ? std::optional<EdgeId>(s[2]) : std::nullopt;
      if (auto e = lower_of(left, right)) return e;
    }
    const bool claimed = view.mine(here[1]) || view.mine(other[1]);
    if (!claimed && view.free(other[1])) return other[1];
  }
  return complete_pending(view);
}

std::string TwiceFirstCycleMachine::digest() const { return join_digest({anchor_}); }

// ---------------------------------------------------------------------------
// FirstMoverCycleMachine

FirstMoverCycleMachine::FirstMoverCycleMachine(Lane ring) : ring_(std::move(ring)) {
  int max_id = ring_.empty() ? 0 : *std::max_element(ring_.begin(), ring_.end());
  pos_of_edge_ = index_positions(ring_, max_id + 1);
}

EdgeId FirstMoverCycleMachine::at(int pos) const {
  const int n = static_cast<int>(ring_.size());
  return ring_[((pos % n) + n) % n];
}

EdgeId FirstMoverCycleMachine::open() {
  auto it = std::min_element(ring_.begin(), ring_.end());
  lo_ = static_cast<int>(it - ring_.begin());
  len_ = 1;
  phase_ = Phase::kExtend;
  return *it;
}

std::optional<EdgeId> FirstMoverCycleMachine::segment_move(const MachineView& view,
                                                           EdgeId toucher_edge) const {
  auto segment = [&](int i) {
    const int s = seg_base_ + 3 * i;
    return std::array<EdgeId, 3>{at(s), at(s + 1), at(s + 2)};
  };
  auto finish = [&](const std::array<EdgeId, 3>& s) -> std::optional<EdgeId> {
    if (!view.mine(s[1]) || view.mine(s[0]) || view.mine(s[2])) return std::nullopt;
    std::optional<EdgeId> left = view.free(s[0]) ? std::optional<EdgeId>(s[0]) : std::nullopt;
    std::optional<EdgeId> right = view.free(s[2]) ? std::optional<EdgeId>(s[2]) : std::nullopt;
    return lower_of(left, right);
  };
  // Defend the target Toucher just attacked.
  for (int i = 0; i < seg_count_; ++i) {
    auto s = segment(i);
    if (std::find(s.begin(), s.end(), toucher_edge) == s.end()) continue;
    if (auto e = finish(s)) return e;
  }
  // Complete any other half-finished target.
  for (int i = 0; i < seg_count_; ++i) {
    if (auto e = finish(segment(i))) return e;
  }
  // Open the lowest unspoilt segment.
  for (int i = 0; i < seg_count_; ++i) {
    auto s = segment(i);
    if (view.free(s[0]) && view.free(s[1]) && view.free(s[2])) return s[1];
  }
  return std::nullopt;
}

std::optional<EdgeId> FirstMoverCycleMachine::respond(const MachineView& view,
                                                      EdgeId toucher_edge) {
  const int n = static_cast<int>(ring_.size());
  if (phase_ == Phase::kIdle) return std::nullopt;
  if (phase_ == Phase::kExtend) {
    if (len_ < n) {
      const EdgeId left = at(lo_ - 1);
      const EdgeId right = at(lo_ + len_);
      std::optional<EdgeId> l = view.free(left) ? std::optional<EdgeId>(left) : std::nullopt;
      std::optional<EdgeId> r = view.free(right) ? std::optional<EdgeId>(right) : std::nullopt;
      if (auto pick = lower_of(l, r)) {
        if (pick == l) lo_ = (lo_ - 1 + n) % n;
        ++len_;
        return pick;
      }
    }
    phase_ = Phase::kSegments;
    seg_base_ = (lo_ + len_ + 1) % n;
    seg_count_ = std::max(0, n - len_ - 2) / 3;
  }
  return segment_move(view, toucher_edge);
}

std::string FirstMoverCycleMachine::digest() const {
  return join_digest({static_cast<int>(phase_), lo_, len_});
}

// ---------------------------------------------------------------------------
// PlannedIsolator

void PlannedIsolator::reset(const GameState& initial) {
  planned_.assign(initial.graph().num_edges(), 0);
  pending_ = kNoEdge;
  last_toucher_ = kNoEdge;
  restart();
}

void PlannedIsolator::observe(const GameState& after, EdgeId edge, Player mover) {
  if (mover == Player::kIsolator) {
    if (pending_ != kNoEdge && after.owner(pending_) == Owner::kIsolator) planned_[pending_] = 1;
    pending_ = kNoEdge;
    return;
  }
  last_toucher_ = edge;
  // A pending edge Toucher has just taken (only possible when Toucher moves
  // twice in a row) is dropped; the machine re-plans from the new view.
  MachineView view(after, planned_);
  std::optional<EdgeId> reply = respond(view, edge);
  pending_ = reply.value_or(kNoEdge);
}

EdgeId PlannedIsolator::choose(const GameState& state) const {
  if (pending_ != kNoEdge && state.is_free(pending_)) return pending_;
  if (last_toucher_ != kNoEdge) {
    Lane local = scope(last_toucher_);
    if (!local.empty()) {
      EdgeId e = max_danger_edge(state, local);
      if (e != kNoEdge) return e;
    }
  }
  return max_danger_edge(state);
}

std::string PlannedIsolator::digest() const {
  std::string out = pack_bits(planned_);
  out += '|' + std::to_string(pending_) + '|' + std::to_string(last_toucher_) + '|';
  out += machine_digest();
  return out;
}

}  // namespace toucher::detail
