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

#include "toucher/solver.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <unordered_map>

#include <json.hpp>

namespace toucher {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t table_memory_bytes(const SolverOptions& options) {
  std::size_t mb = options.table_memory_mb;
  if (mb == 0) {
    mb = kDefaultTableMemoryMb;
    if (const char* env = std::getenv(kTableMemoryEnv)) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) mb = static_cast<std::size_t>(parsed);
    }
  }
  return mb * 1024 * 1024;
}

int effective_ceiling(const SolverOptions& options) {
  return std::clamp(options.edge_ceiling, 0, kMaxPackedEdges);
}

void check_ceiling(int edges, const SolverOptions& options) {
  const int ceiling = effective_ceiling(options);
  if (edges > ceiling) {
    throw SolverError(SolverError::Kind::kCeilingExceeded,
                      std::to_string(edges) + " edges exceed the solver ceiling of " +
                          std::to_string(ceiling));
  }
}

[[noreturn]] void memory_cap_exceeded(std::size_t bytes) {
  throw SolverError(SolverError::Kind::kMemoryCap,
                    "transposition table would exceed its memory cap of " +
                        std::to_string(bytes / (1024 * 1024)) + " MiB (set " +
                        kTableMemoryEnv + " to raise it)");
}

// Open-addressing table of value bounds keyed on the packed ownership.
// Keys are stored in full, so lookups never confuse two positions.
class BoundTable {
 public:
  struct Bounds {
    std::int8_t lo;
    std::int8_t hi;
  };

  explicit BoundTable(std::size_t max_bytes)
      : max_bytes_(max_bytes), slots_(std::size_t{1} << 12) {}

  const Bounds* find(std::uint64_t key) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
      if (slots_[i].tag == 0) return nullptr;
      if (slots_[i].tag == key + 1) return &slots_[i].bounds;
    }
  }

  void store(std::uint64_t key, Bounds b) {
    if ((used_ + 1) * 2 > slots_.size()) grow();
    Slot& s = locate(key);
    if (s.tag == 0) {
      s.tag = key + 1;
      ++used_;
    }
    s.bounds = b;
  }

 private:
  struct Slot {
    std::uint64_t tag = 0;  // key + 1; 0 marks an empty slot
    Bounds bounds{0, 0};
  };

  static std::size_t hash(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xFF51AFD7ED558CCDULL;
    x ^= x >> 33;
    x *= 0xC4CEB9FE1A85EC53ULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }

  Slot& locate(std::uint64_t key) {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(key) & mask;; i = (i + 1) & mask) {
      if (slots_[i].tag == 0 || slots_[i].tag == key + 1) return slots_[i];
    }
  }

  void grow() {
    const std::size_t next = slots_.size() * 2;
    if (next * sizeof(Slot) > max_bytes_) memory_cap_exceeded(max_bytes_);
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(next, Slot{});
    for (const Slot& s : old) {
      if (s.tag != 0) locate(s.tag - 1) = s;
    }
  }

  std::size_t max_bytes_;
  std::vector<Slot> slots_;
  std::size_t used_ = 0;
};

// Alpha-beta over 32-bit ownership masks. Vertices of degree 0 are constant
// untouched vertices and are kept out of the masks.
class ExactSearch {
 public:
  ExactSearch(const GameState& root, const SolverOptions& options)
      : options_(options), table_(table_memory_bytes(options)) {
    const Graph& g = root.graph();
    m_ = g.num_edges();
    std::vector<int> index(g.num_vertices(), -1);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) == 0) {
        ++constant_untouched_;
      } else {
        index[v] = static_cast<int>(incident_.size());
        incident_.push_back(0);
      }
    }
    for (EdgeId e = 0; e < m_; ++e) {
      const Edge& ed = g.edge(e);
      ends_.push_back({index[ed.u], index[ed.v]});
      incident_[index[ed.u]] |= 1u << e;
      incident_[index[ed.v]] |= 1u << e;
      if (root.owner(e) == Owner::kToucher) root_t_ |= 1u << e;
      if (root.owner(e) == Owner::kIsolator) root_i_ |= 1u << e;
    }
    for (int k = 0; k < m_; ++k) movers_.push_back(root.schedule().player_at(k));
  }

  SolveResult run() {
    const auto start = Clock::now();
    SolveResult result;
    result.ceiling = effective_ceiling(options_);
    const std::uint32_t t = root_t_, i = root_i_;
    const int made = std::popcount(t | i);
    if (made == m_) {
      result.value = untouched(t);
    } else {
      ++nodes_;
      const Player mover = movers_[made];
      int alpha = -1, beta = kInfinity;
      const int lo = isolated(t, i), hi = untouched(t);
      Moves moves = ordered_moves(t, i);
      if (moves.count == 0) moves = all_free(t, i);
      int best = mover == Player::kIsolator ? -1 : kInfinity;
      for (int k = 0; k < moves.count; ++k) {
        const std::uint32_t bit = 1u << moves.edge[k];
        if (mover == Player::kIsolator) {
          int v = search(t, i | bit, alpha, beta);
          if (v > best) {
            best = v;
            result.best_move = moves.edge[k];
          }
          if (options_.alpha_beta) alpha = std::max(alpha, v);
          if (best == hi) break;
        } else {
          int v = search(t | bit, i, alpha, beta);
          if (v < best) {
            best = v;
            result.best_move = moves.edge[k];
          }
          if (options_.alpha_beta) beta = std::min(beta, v);
          if (best == lo) break;
        }
      }
      result.value = best;
    }
    result.nodes_expanded = nodes_;
    result.table_hits = hits_;
    result.elapsed = Clock::now() - start;
    return result;
  }

 private:
  static constexpr int kInfinity = 1 << 20;

  struct Moves {
    std::array<int, kMaxPackedEdges> edge{};
    int count = 0;
  };

  int untouched(std::uint32_t t) const {
    int count = constant_untouched_;
    for (std::uint32_t inc : incident_) count += (inc & t) == 0;
    return count;
  }

  int isolated(std::uint32_t t, std::uint32_t i) const {
    (void)t;
    int count = constant_untouched_;
    for (std::uint32_t inc : incident_) count += (inc & ~i) == 0;
    return count;
  }

  Moves all_free(std::uint32_t t, std::uint32_t i) const {
    Moves moves;
    for (int e = 0; e < m_; ++e) {
      if (!(((t | i) >> e) & 1u)) moves.edge[moves.count++] = e;
    }
    return moves;
  }

  // Free edges with an untouched endpoint (all free edges when dead-edge
  // pruning is off), most dangerous first, lowest id on ties.
  Moves ordered_moves(std::uint32_t t, std::uint32_t i) const {
    const std::uint32_t free = ~(t | i) & (m_ == 32 ? ~0u : ((1u << m_) - 1));
    std::array<std::uint64_t, kMaxPackedEdges> weight{};
    Moves moves;
    auto vertex_weight = [&](int v) -> std::uint64_t {
      if (incident_[v] & t) return 0;
      return std::uint64_t{1} << (40 - std::popcount(incident_[v] & free));
    };
    for (int e = 0; e < m_; ++e) {
      if (!((free >> e) & 1u)) continue;
      const std::uint64_t w = vertex_weight(ends_[e].first) + vertex_weight(ends_[e].second);
      if (options_.prune_dead_edges && w == 0) continue;
      int k = moves.count++;
      while (k > 0 && weight[k - 1] < w) {
        weight[k] = weight[k - 1];
        moves.edge[k] = moves.edge[k - 1];
        --k;
      }
      weight[k] = w;
      moves.edge[k] = e;
    }
    return moves;
  }

  int search(std::uint32_t t, std::uint32_t i, int alpha, int beta) {
    ++nodes_;
    const int made = std::popcount(t | i);
    if (made == m_) return untouched(t);
    int lo = isolated(t, i);
    int hi = untouched(t);
    if (lo == hi) return lo;
    if (options_.alpha_beta) {
      if (lo >= beta) return lo;
      if (hi <= alpha) return hi;
    }
    const std::uint64_t key = t | (std::uint64_t{i} << 32);
    if (options_.transposition_table) {
      if (const BoundTable::Bounds* b = table_.find(key)) {
        ++hits_;
        lo = std::max<int>(lo, b->lo);
        hi = std::min<int>(hi, b->hi);
        if (lo >= hi) return lo;
        if (options_.alpha_beta) {
          if (lo >= beta) return lo;
          if (hi <= alpha) return hi;
        }
      }
    }
    if (options_.alpha_beta) {
      alpha = std::max(alpha, lo);
      beta = std::min(beta, hi);
    } else {
      alpha = -1;
      beta = kInfinity;
    }
    const int alpha0 = alpha, beta0 = beta;
    Moves moves = ordered_moves(t, i);
    if (moves.count == 0) return hi;  // only dead edges remain
    const Player mover = movers_[made];
    int best;
    if (mover == Player::kIsolator) {
      best = -1;
      for (int k = 0; k < moves.count; ++k) {
        best = std::max(best, search(t, i | (1u << moves.edge[k]), alpha, beta));
        if (best >= hi) break;
        if (options_.alpha_beta) {
          alpha = std::max(alpha, best);
          if (best >= beta) break;
        }
      }
    } else {
      best = kInfinity;
      for (int k = 0; k < moves.count; ++k) {
        best = std::min(best, search(t | (1u << moves.edge[k]), i, alpha, beta));
        if (best <= lo) break;
        if (options_.alpha_beta) {
          beta = std::min(beta, best);
          if (best <= alpha) break;
        }
      }
    }
    if (options_.transposition_table) {
      BoundTable::Bounds b{static_cast<std::int8_t>(lo), static_cast<std::int8_t>(hi)};
      if (!options_.alpha_beta || (best > alpha0 && best < beta0)) {
        b.lo = b.hi = static_cast<std::int8_t>(best);
      } else if (best <= alpha0) {
        b.hi = static_cast<std::int8_t>(std::min(hi, best));
      } else {
        b.lo = static_cast<std::int8_t>(std::max(lo, best));
      }
      table_.store(key, b);
    }
    return best;
  }

  SolverOptions options_;
  BoundTable table_;
  int m_ = 0;
  int constant_untouched_ = 0;
  std::vector<std::uint32_t> incident_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<Player> movers_;
  std::uint32_t root_t_ = 0;
  std::uint32_t root_i_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t hits_ = 0;
};

int minimax(GameState& s) {
  if (s.is_terminal()) return untouched_count(s);
  const bool maximise = s.whose_turn() == Player::kIsolator;
  int best = maximise ? -1 : s.graph().num_vertices() + 1;
  for (EdgeId e = 0; e < s.graph().num_edges(); ++e) {
    if (!s.is_free(e)) continue;
    s.apply(e);
    const int v = minimax(s);
    s.undo(e);
    best = maximise ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

// Exhaustive search for one side against a fixed strategy, memoised on the
// packed ownership plus the strategy's state digest.
class BestResponseSearch {
 public:
  BestResponseSearch(const Graph& g, const TurnSchedule& schedule, Player fixed_side,
                     const SolverOptions& options)
      : state_(g, schedule),
        fixed_side_(fixed_side),
        budget_(options.node_budget),
        max_bytes_(table_memory_bytes(options)) {}

  SolveResult run(const Strategy& fixed) {
    const auto start = Clock::now();
    std::unique_ptr<Strategy> root = fixed.clone();
    root->reset(state_);
    SolveResult result;
    result.value = search(*root, &result.best_move);
    result.nodes_expanded = nodes_;
    result.table_hits = hits_;
    result.elapsed = Clock::now() - start;
    return result;
  }

 private:
  int search(const Strategy& strategy, std::optional<EdgeId>* best_move) {
    if (++nodes_ > budget_) {
      throw SolverError(SolverError::Kind::kNodeBudget,
                        "best-response search exceeded its node budget of " +
                            std::to_string(budget_));
    }
    if (state_.is_terminal()) return untouched_count(state_);
    const int lo = isolated_so_far(state_);
    const int hi = untouched_so_far(state_);
    if (lo == hi && best_move == nullptr) return lo;

    const Player mover = state_.whose_turn();
    int best;
    if (mover == fixed_side_) {
      // Not memoised: a fixed-side node has a single child, which is.
      const EdgeId e = strategy.choose(state_);
      if (e < 0 || e >= state_.graph().num_edges() || !state_.is_free(e)) {
        throw SolverError(SolverError::Kind::kIllegalStrategyMove,
                          "strategy '" + strategy.name() + "' returned illegal edge " +
                              std::to_string(e) + " at ply " +
                              std::to_string(state_.moves_made()));
      }
      best = play(strategy, e, mover);
      if (best_move) *best_move = e;
      return best;
    }
    std::string key(sizeof(std::uint64_t), '\0');
    const std::uint64_t packed = state_.packed();
    std::memcpy(key.data(), &packed, sizeof packed);
    key += strategy.digest();
    if (best_move == nullptr) {
      if (auto it = memo_.find(key); it != memo_.end()) {
        ++hits_;
        return it->second;
      }
    }
    {
      const bool maximise = mover == Player::kIsolator;
      best = maximise ? -1 : state_.graph().num_vertices() + 1;
      for (EdgeId e = 0; e < state_.graph().num_edges(); ++e) {
        if (!state_.is_free(e)) continue;
        const int v = play(strategy, e, mover);
        if (maximise ? v > best : v < best) {
          best = v;
          if (best_move) *best_move = e;
        }
        if (best == (maximise ? hi : lo)) break;
      }
    }
    bytes_ += key.size() + 64;
    if (bytes_ > max_bytes_) memory_cap_exceeded(max_bytes_);
    memo_.emplace(std::move(key), best);
    return best;
  }

  int play(const Strategy& strategy, EdgeId e, Player mover) {
    state_.apply(e);
    std::unique_ptr<Strategy> next = strategy.clone();
    next->observe(state_, e, mover);
    const int v = search(*next, nullptr);
    state_.undo(e);
    return v;
  }

  GameState state_;
  Player fixed_side_;
  std::uint64_t budget_;
  std::size_t max_bytes_;
  std::size_t bytes_ = 0;
  std::unordered_map<std::string, int> memo_;
  std::uint64_t nodes_ = 0;
  std::uint64_t hits_ = 0;
};

class SubgameSearch {
 public:
  SubgameSearch(const Graph& g, const SubgameSpec& spec, const SolverOptions& options)
      : spec_(spec), max_bytes_(table_memory_bytes(options)) {
    std::set<EdgeId> seen;
    std::vector<int> region_index(g.num_edges(), -1);
    for (EdgeId e : spec.region) {
      if (e < 0 || e >= g.num_edges()) bad("region edge " + std::to_string(e) + " out of range");
      if (!seen.insert(e).second) bad("region edge " + std::to_string(e) + " listed twice");
      region_index[e] = static_cast<int>(region_.size());
      region_.push_back(e);
    }
    check_ceiling(static_cast<int>(region_.size()), options);
    for (const auto& [e, who] : spec.preclaimed) {
      if (e < 0 || e >= g.num_edges()) bad("preclaimed edge " + std::to_string(e) + " out of range");
      if (region_index[e] >= 0) {
        const std::uint32_t bit = 1u << region_index[e];
        (who == Player::kToucher ? fixed_t_ : fixed_i_) |= bit;
      }
    }
    std::set<VertexId> objective(spec.objective.begin(), spec.objective.end());
    for (VertexId v : objective) {
      if (v < 0 || v >= g.num_vertices()) bad("objective vertex " + std::to_string(v) + " out of range");
      Objective o;
      for (const Incidence& inc : g.incident(v)) {
        const EdgeId e = inc.edge;
        auto pre = spec.preclaimed.find(e);
        if (region_index[e] >= 0 && pre == spec.preclaimed.end()) {
          o.region_mask |= 1u << region_index[e];
        } else if (pre != spec.preclaimed.end()) {
          (pre->second == Player::kToucher ? o.pre_toucher : o.pre_isolator) += 1;
        } else {
          bad("objective vertex " + std::to_string(v) + " has edge " + std::to_string(e) +
              " outside the region and the preclaimed edges");
        }
      }
      objectives_.push_back(o);
    }
    const int r = static_cast<int>(region_.size());
    playable_ = (r == 32 ? ~0u : ((1u << r) - 1)) & ~(fixed_t_ | fixed_i_);
  }

  SolveResult run() {
    const auto start = Clock::now();
    SolveResult result;
    Root root;
    result.value = search(0, 0, spec_.first_mover, false, &root);
    if (root.has_move) {
      if (root.pass) {
        result.best_move_is_pass = true;
      } else {
        result.best_move = region_[root.index];
      }
    }
    result.nodes_expanded = nodes_;
    result.table_hits = hits_;
    result.elapsed = Clock::now() - start;
    return result;
  }

 private:
  struct Objective {
    std::uint32_t region_mask = 0;
    int pre_toucher = 0;
    int pre_isolator = 0;
  };
  struct Root {
    bool has_move = false;
    bool pass = false;
    int index = 0;
  };

  [[noreturn]] static void bad(const std::string& message) {
    throw SolverError(SolverError::Kind::kBadSpec, "subgame: " + message);
  }

  int untouched(std::uint32_t t) const {
    int count = 0;
    for (const Objective& o : objectives_) count += o.pre_toucher == 0 && (o.region_mask & t) == 0;
    return count;
  }

  int isolated(std::uint32_t i) const {
    int count = 0;
    for (const Objective& o : objectives_) {
      count += o.pre_toucher == 0 && (o.region_mask & ~i) == 0;
    }
    return count;
  }

  int search(std::uint32_t t, std::uint32_t i, Player mover, bool last_pass, Root* root) {
    ++nodes_;
    const std::uint32_t free = playable_ & ~(t | i);
    if (free == 0) return untouched(t);
    const int lo = isolated(i);
    const int hi = untouched(t);
    if (lo == hi && root == nullptr) return lo;
    const int slot = (mover == Player::kIsolator ? 2 : 0) + (last_pass ? 1 : 0);
    const std::uint64_t key = t | (std::uint64_t{i} << 32);
    if (root == nullptr) {
      if (auto it = memo_[slot].find(key); it != memo_[slot].end()) {
        ++hits_;
        return it->second;
      }
    }
    const bool maximise = mover == Player::kIsolator;
    int best = maximise ? -1 : kInfinity;
    auto consider = [&](int v, bool pass, int index) {
      if (maximise ? v > best : v < best) {
        best = v;
        if (root) *root = Root{true, pass, index};
      }
    };
    for (int k = 0; k < static_cast<int>(region_.size()); ++k) {
      if (!((free >> k) & 1u)) continue;
      const std::uint32_t bit = 1u << k;
      consider(maximise ? search(t, i | bit, opponent(mover), false, nullptr)
                        : search(t | bit, i, opponent(mover), false, nullptr),
               false, k);
      if (best == (maximise ? hi : lo)) break;
    }
    const bool may_pass = spec_.pass_allowed.count(mover) > 0 && !last_pass;
    if (may_pass && best != (maximise ? hi : lo)) {
      consider(search(t, i, opponent(mover), true, nullptr), true, 0);
    }
    bytes_ += 48;
    if (bytes_ > max_bytes_) memory_cap_exceeded(max_bytes_);
    memo_[slot].emplace(key, best);
    return best;
  }

  static constexpr int kInfinity = 1 << 20;

  const SubgameSpec& spec_;
  std::size_t max_bytes_;
  std::size_t bytes_ = 0;
  std::vector<EdgeId> region_;
  std::vector<Objective> objectives_;
  std::uint32_t fixed_t_ = 0;
  std::uint32_t fixed_i_ = 0;
  std::uint32_t playable_ = 0;
  std::array<std::unordered_map<std::uint64_t, int>, 4> memo_;
  std::uint64_t nodes_ = 0;
  std::uint64_t hits_ = 0;
};

}  // namespace

SolveResult solve_position(const GameState& state, const SolverOptions& options) {
  check_ceiling(state.graph().num_edges(), options);
  ExactSearch search(state, options);
  return search.run();
}

SolveResult solve_exact(const Graph& g, const TurnSchedule& schedule,
                        const SolverOptions& options) {
  check_ceiling(g.num_edges(), options);
  return solve_position(GameState(g, schedule), options);
}

int minimax_reference(const GameState& state) {
  if (state.graph().num_edges() > 12) {
    throw SolverError(SolverError::Kind::kCeilingExceeded,
                      "minimax_reference is limited to 12 edges");
  }
  GameState s = state;
  return minimax(s);
}

SolveResult best_response_value(const Graph& g, const TurnSchedule& schedule, Player fixed_side,
                                const Strategy& fixed, const SolverOptions& options) {
  check_ceiling(g.num_edges(), options);
  if (fixed.side() != fixed_side) {
    throw std::invalid_argument("best_response_value: strategy plays the other side");
  }
  BestResponseSearch search(g, schedule, fixed_side, options);
  SolveResult result = search.run(fixed);
  result.ceiling = effective_ceiling(options);
  return result;
}

SolveResult solve_subgame(const Graph& g, const SubgameSpec& spec,
                          const SolverOptions& options) {
  SubgameSearch search(g, spec, options);
  SolveResult result = search.run();
  result.ceiling = effective_ceiling(options);
  return result;
}

std::vector<ValueRow> value_table(const FamilySpec& base, const std::vector<int>& sizes,
                                  const TurnSchedule& schedule, const SolverOptions& options) {
  std::vector<ValueRow> rows;
  for (int size : sizes) {
    FamilySpec spec = base;
    (family_uses_n(spec.family) ? spec.n : spec.count) = size;
    SolveResult r = solve_exact(generate(spec), schedule, options);
    rows.push_back({size, r.value, r});
  }
  return rows;
}

std::string solve_result_json(const SolveResult& result) {
  nlohmann::json j;
  j["value"] = result.value;
  if (result.best_move_is_pass) {
    j["best_move"] = "pass";
  } else if (result.best_move) {
    j["best_move"] = *result.best_move;
  } else {
    j["best_move"] = nullptr;
  }
  j["nodes"] = result.nodes_expanded;
  j["table_hits"] = result.table_hits;
  j["elapsed_ms"] = result.elapsed.count();
  j["ceiling"] = result.ceiling;
  return j.dump();
}

}  // namespace toucher
