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

// Building blocks shared by the cycle, path and 2-regular Isolator
// strategies. Internal to the library.
//
// Every machine reasons about a *view* of the board in which Isolator owns
// exactly the edges the machines asked for ("planned" edges). Isolator
// edges that came from fallback moves are seen as free. When a machine asks
// for an edge that Isolator already owns for real, the strategy plays a
// fallback move instead and the edge becomes planned; the view stays a
// legal position of the game the machines are analysing, in which Isolator
// simply owns fewer edges than in reality.

#ifndef TOUCHER_SRC_SEGMENT_MACHINES_H_
#define TOUCHER_SRC_SEGMENT_MACHINES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toucher/game.h"
#include "toucher/strategy.h"

namespace toucher::detail {

class MachineView {
 public:
  MachineView(const GameState& state, const std::vector<std::uint8_t>& planned)
      : state_(&state), planned_(&planned) {}

  bool toucher(EdgeId e) const { return state_->owner(e) == Owner::kToucher; }
  bool mine(EdgeId e) const { return (*planned_)[e] != 0; }
  bool free(EdgeId e) const { return !toucher(e) && !mine(e); }

 private:
  const GameState* state_;
  const std::vector<std::uint8_t>* planned_;
};

// A run of consecutive edges (each shares a vertex with the next).
using Lane = std::vector<EdgeId>;

// Half-open range of positions inside a frame.
struct Range {
  int begin = 0;
  int end = 0;
};

Lane slice(const Lane& frame, Range r);

// Grows a string of consecutive Isolator edges inside a five-edge lane:
// first the central edge, then repeatedly a free edge adjacent to either
// end of the string (lowest edge id when both are possible). A string of
// L edges isolates its L-1 internal vertices.
class StringGrower {
 public:
  explicit StringGrower(Lane lane) : lane_(std::move(lane)) {}

  // Next edge to claim, or nullopt once the string cannot grow.
  std::optional<EdgeId> next(const MachineView& view);
  bool finished() const { return finished_; }
  int length() const { return lo_ < 0 ? 0 : hi_ - lo_ + 1; }
  std::string digest() const;

 private:
  Lane lane_;
  int lo_ = -1;
  int hi_ = -1;
  bool finished_ = false;
};

// Isolates one vertex inside three consecutive edges a,b,c: claim the
// middle edge b, then whichever of a, c survives. The window is the first
// one (over the lanes in order) holding no Toucher edge and not yet
// isolating a vertex; with `require_free` every edge of the window must be
// free, which keeps targets away from vertices already counted elsewhere.
class TripleSeeker {
 public:
  TripleSeeker(std::vector<Lane> lanes, bool require_free)
      : lanes_(std::move(lanes)), require_free_(require_free) {}

  std::optional<EdgeId> next(const MachineView& view);
  // The chosen window has two adjacent Isolator edges.
  bool complete(const MachineView& view) const;
  bool has_window() const { return lane_ >= 0; }
  std::string digest() const;

 private:
  std::vector<Lane> lanes_;
  bool require_free_;
  int lane_ = -1;
  int start_ = -1;
};

// Sub-segment layout for one segment machine, in frame positions.
struct SegmentLayout {
  int target = 0;
  std::optional<Range> first_string;
  std::optional<Range> second_string;
  // Windows searched after the strings produced only 2-edge strings.
  std::vector<Range> triple_after_short;
  // Windows searched after the first string reached three edges.
  std::vector<Range> triple_after_three;
};

// 16-edge layout for Toucher's first move at frame position t in 0..7
// (positions 8..15 are handled by reflecting the frame).
SegmentLayout sixteen_edge_layout(int t);
// Leftover layout for a cycle segment of k edges whose last edge (position
// k-1) is Toucher's first move of the game.
SegmentLayout leftover_layout(int k);

// Runs a layout: first string, optional second string, then one triple
// search, stopping once `target` vertices are banked.
class SegmentMachine {
 public:
  SegmentMachine(Lane frame, SegmentLayout layout);

  std::optional<EdgeId> respond(const MachineView& view);
  int banked() const { return banked_; }
  bool done() const { return phase_ == Phase::kDone; }
  std::string digest() const;

 private:
  enum class Phase : std::uint8_t { kFirst, kSecond, kTriple, kDone };

  void start_triple(const std::vector<Range>& regions);
  void after_string(int length, bool was_first);

  Lane frame_;
  SegmentLayout layout_;
  Phase phase_ = Phase::kDone;
  int banked_ = 0;
  std::optional<StringGrower> grower_;
  std::optional<TripleSeeker> seeker_;
};

// Partition of a cycle (given in walking order) into one leftover segment
// ending at Toucher's first edge and 16-edge segments after it, each run by
// its own SegmentMachine.
class CyclePlan {
 public:
  explicit CyclePlan(Lane ring);

  bool owns(EdgeId e) const;
  std::optional<EdgeId> respond(const MachineView& view, EdgeId toucher_edge);
  // Edges of the segment containing e (the whole ring before partitioning).
  Lane segment_edges(EdgeId e) const;
  std::string digest() const;

 private:
  int position(EdgeId e) const;
  int segment_of(int pos) const;

  Lane ring_;
  std::vector<int> pos_of_edge_;  // indexed by edge id, -1 if absent
  int anchor_ = -1;
  int leftover_ = 0;
  std::vector<Lane> segments_;  // [0] leftover, then 16-edge segments
  std::vector<std::optional<SegmentMachine>> machines_;
};

// The end segments of a path and the leaf-grabbing case analysis for them.
// Lanes run from the leaf inward.
class PathEndMachine {
 public:
  PathEndMachine(Lane left, Lane right, int k) : left_(std::move(left)), right_(std::move(right)), k_(k) {}

  bool owns(EdgeId e) const;
  std::optional<EdgeId> respond(const MachineView& view, EdgeId toucher_edge);
  std::string digest() const;

 private:
  enum class Phase : std::uint8_t { kIdle, kAfterLeaf, kString, kTookB2, kTookA1, kTriple, kDone };

  const Lane& a() const { return a_is_left_ ? left_ : right_; }
  const Lane& b() const { return a_is_left_ ? right_ : left_; }
  std::optional<EdgeId> triple(const MachineView& view, std::vector<Lane> lanes);

  Lane left_;
  Lane right_;
  int k_;
  bool a_is_left_ = true;
  Phase phase_ = Phase::kIdle;
  std::optional<StringGrower> grower_;
  std::optional<TripleSeeker> seeker_;
};

// Isolator answers inside a cycle on which Toucher effectively moved first
// twice: after Toucher's first edge, consecutive 6-edge sections each hold
// two 3-edge segments; Toucher entering one segment is answered with the
// centre of the other, and later with a surviving neighbour of that centre.
class TwiceFirstCycleMachine {
 public:
  explicit TwiceFirstCycleMachine(Lane ring);

  std::optional<EdgeId> respond(const MachineView& view, EdgeId toucher_edge);
  std::string digest() const;

 private:
  std::optional<EdgeId> complete_pending(const MachineView& view) const;

  Lane ring_;
  std::vector<int> pos_of_edge_;
  int anchor_ = -1;
};

// Isolator on a cycle where Isolator moves first: claim an edge, extend a
// string of own edges until Toucher blocks both ends, then take centres of
// unspoilt 3-edge segments of the remaining arc and complete them.
class FirstMoverCycleMachine {
 public:
  explicit FirstMoverCycleMachine(Lane ring);

  // Isolator's opening edge in this cycle (the lowest edge id).
  EdgeId open();
  std::optional<EdgeId> respond(const MachineView& view, EdgeId toucher_edge);
  std::string digest() const;

 private:
  enum class Phase : std::uint8_t { kIdle, kExtend, kSegments };

  EdgeId at(int pos) const;
  std::optional<EdgeId> segment_move(const MachineView& view, EdgeId toucher_edge) const;

  Lane ring_;
  std::vector<int> pos_of_edge_;
  Phase phase_ = Phase::kIdle;
  int lo_ = 0;
  int len_ = 0;
  int seg_base_ = 0;
  int seg_count_ = 0;
};

// Shared driver for the segment Isolators: answers each Toucher move with
// the responsible machine's edge; when that edge is already Isolator's (or
// no machine wants to move) plays max-danger inside the active segment, then
// globally.
class PlannedIsolator : public Strategy {
 public:
  Player side() const final { return Player::kIsolator; }
  void reset(const GameState& initial) final;
  void observe(const GameState& after, EdgeId edge, Player mover) final;
  EdgeId choose(const GameState& state) const final;
  std::string digest() const final;

 protected:
  virtual void restart() = 0;
  virtual std::optional<EdgeId> respond(const MachineView& view, EdgeId toucher_edge) = 0;
  virtual Lane scope(EdgeId toucher_edge) const = 0;
  virtual std::string machine_digest() const = 0;

 private:
  std::vector<std::uint8_t> planned_;
  EdgeId pending_ = kNoEdge;
  EdgeId last_toucher_ = kNoEdge;
};

std::vector<int> index_positions(const Lane& lane, int num_edges);
// Fixed-length byte encoding of a 0/1 vector, for state digests.
std::string pack_bits(const std::vector<std::uint8_t>& bits);

}  // namespace toucher::detail

#endif  // TOUCHER_SRC_SEGMENT_MACHINES_H_
