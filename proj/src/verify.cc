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

#include "toucher/verify.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "toucher/bounds.h"
#include "toucher/experiment.h"
#include "toucher/generators.h"
#include "toucher/match.h"
#include "toucher/strategies.h"

namespace toucher {

namespace {

using Clock = std::chrono::steady_clock;

// Outcome of one check body: pass/fail plus a human-readable explanation.
struct Verdict {
  bool passed = false;
  std::string details;
};

Verdict expect_eq(std::int64_t actual, std::int64_t expected, const std::string& what) {
  return {actual == expected,
          what + " = " + std::to_string(actual) + " (expected " + std::to_string(expected) + ")"};
}

Verdict expect_ge(std::int64_t actual, std::int64_t bound, const std::string& what) {
  return {actual >= bound,
          what + " = " + std::to_string(actual) + " (required >= " + std::to_string(bound) + ")"};
}

// Collects results for one suite, timing each check and turning exceptions
// into failures.
class SuiteRun {
 public:
  SuiteRun(std::string suite, const VerifyOptions& options)
      : suite_(std::move(suite)), options_(options) {}

  void check(const std::string& name, const std::function<Verdict()>& body) {
    CheckResult result;
    result.suite = suite_;
    result.name = name;
    const auto start = Clock::now();
    try {
      const Verdict v = body();
      result.passed = v.passed;
      result.details = v.details;
    } catch (const std::exception& e) {
      result.passed = false;
      result.details = std::string("exception: ") + e.what();
    }
    result.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (options_.progress) *options_.progress << format_check(result) << '\n' << std::flush;
    results_.push_back(std::move(result));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  const VerifyOptions& options_;
  std::vector<CheckResult> results_;
};

std::vector<CorpusEntry> small_corpus(const VerifyOptions& options, int max_edges) {
  std::vector<CorpusEntry> out;
  for (auto& entry : default_corpus(options.corpus_seed)) {
    if (entry.graph.num_edges() <= max_edges) out.push_back(std::move(entry));
  }
  return out;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  std::vector<Edge> edges;
  int offset = 0;
  for (const auto& g : parts) {
    for (const Edge& e : g.edges()) edges.push_back({e.u + offset, e.v + offset});
    offset += g.num_vertices();
  }
  return Graph(offset, std::move(edges));
}

// Accumulates per-graph failures for corpus-wide checks.
class FailureList {
 public:
  void add(const std::string& text) {
    ++count_;
    if (count_ <= 5) text_ += (text_.empty() ? "" : "; ") + text;
  }
  Verdict verdict(int total, const std::string& what) const {
    if (count_ == 0) return {true, what + " on " + std::to_string(total) + " graphs"};
    return {false, std::to_string(count_) + " of " + std::to_string(total) + " failed: " + text_};
  }

 private:
  int count_ = 0;
  std::string text_;
};

// ---------------------------------------------------------------------------
// solver-regression

std::vector<CheckResult> solver_regression(const VerifyOptions& options) {
  SuiteRun run("solver-regression", options);
  struct Case {
    std::string label;
    Graph graph;
    int expected;
  };
  std::vector<Case> cases = {
      {"cycle(3)", cycle_graph(3), 0},  {"cycle(4)", cycle_graph(4), 1},
      {"path(2)", path_graph(2), 0},    {"path(3)", path_graph(3), 1},
      {"path(6)", path_graph(6), 1},    {"path(7)", path_graph(7), 2},
      {"k4_components(1)", k4_components(1), 0},
  };
  for (int n : {3, 5, 7, 9}) {
    cases.push_back({"star(" + std::to_string(n) + ")", star_graph(n), (n - 1) / 2});
  }
  for (int x = 0; x <= 3; ++x) {
    cases.push_back(
        {"p3_components_plus_p2(" + std::to_string(x) + ")", p3_components_plus_p2(x), x});
  }
  cases.push_back({"c3_components(3)", c3_components(3), 1});

  const auto start = Clock::now();
  for (const auto& c : cases) {
    run.check("u(" + c.label + ")", [&] {
      return expect_eq(solve_exact(c.graph, TurnSchedule::standard(), options.solver).value,
                       c.expected, "u");
    });
  }
  const double total_s = std::chrono::duration<double>(Clock::now() - start).count();
  run.check("total runtime under 10 s", [&] {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.1f ms", total_s * 1000.0);
    return Verdict{total_s < 10.0, buffer};
  });
  return run.take();
}

// ---------------------------------------------------------------------------
// bound-sandwich

std::string describe_verdicts(const std::vector<SandwichVerdict>& verdicts) {
  std::string out;
  for (const auto& v : verdicts) {
    if (!v.holds || v.tight) {
      out += (out.empty() ? "" : ", ") + v.name + "=" + std::to_string(v.tightened) +
             (v.holds ? " tight" : " VIOLATED");
    }
  }
  return out;
}

Verdict entry_tight(const Graph& g, int u, const std::string& entry_name) {
  const BoundsReport report = closed_form_bounds(g);
  const BoundEntry& e = report.entry(entry_name);
  return {e.applicable && e.tightened == u,
          entry_name + " = " + std::to_string(e.tightened) + " (raw " + e.raw.to_string() +
              "), u = " + std::to_string(u)};
}

std::vector<CheckResult> bound_sandwich(const VerifyOptions& options) {
  SuiteRun run("bound-sandwich", options);
  const auto corpus = small_corpus(options, options.max_edges);

  for (const auto& entry : corpus) {
    run.check("sandwich " + entry.name, [&] {
      const int u = solve_exact(entry.graph, TurnSchedule::standard(), options.solver).value;
      const auto verdicts = sandwich_check(entry.graph, u);
      bool ok = std::all_of(verdicts.begin(), verdicts.end(),
                            [](const SandwichVerdict& v) { return v.holds; });
      const Rational sum = danger_sum(entry.graph);
      const Rational refined = refined_upper_bound(entry.graph);
      const bool refined_ok = refined <= sum && Rational(u) <= refined;
      const BoundsReport report = closed_form_bounds(entry.graph);
      const bool ordered =
          report.entry("danger_sum.lower").raw <= report.entry("danger_sum.upper").raw;
      ok = ok && refined_ok && ordered;
      std::string details = "u=" + std::to_string(u) + ", " +
                            std::to_string(verdicts.size()) + " bounds";
      const std::string notes = describe_verdicts(verdicts);
      if (!notes.empty()) details += " [" + notes + "]";
      details += ", refined " + refined.to_string() + " <= danger sum " + sum.to_string();
      if (!refined_ok) details += " REFINED VIOLATED";
      if (!ordered) details += " DANGER BOUNDS UNORDERED";
      return Verdict{ok, details};
    });
  }

  for (int k : {4, 5, 6, 10, 11, 12, 16}) {
    run.check("u(cycle(" + std::to_string(k) + ")) >= ceil(k/6)", [&] {
      const int u = solve_exact(cycle_graph(k), TurnSchedule::standard(), options.solver).value;
      return expect_ge(u, (k + 5) / 6, "u");
    });
  }

  run.check("danger_sum.lower beats degree_classes.lower on paths", [&] {
    FailureList failures;
    int total = 0;
    // path(2) ties at 0 for both; the strict comparison starts at 3.
    for (int n = 3; n <= 16; ++n, ++total) {
      const BoundsReport r = closed_form_bounds(path_graph(n));
      if (!(r.entry("danger_sum.lower").raw > r.entry("degree_classes.lower").raw) ||
          r.dominant_lower != "danger_sum") {
        failures.add("path(" + std::to_string(n) + ")");
      }
    }
    return failures.verdict(total, "path(3..16)");
  });

  run.check("cycle(3) cycle.lower tight", [&] { return entry_tight(cycle_graph(3), 0, "cycle.lower"); });
  run.check("cycle(4) cycle.lower tight", [&] { return entry_tight(cycle_graph(4), 1, "cycle.lower"); });
  run.check("cycle(4) danger_sum.upper tight",
            [&] { return entry_tight(cycle_graph(4), 1, "danger_sum.upper"); });
  run.check("k2_components(3) degree_classes.lower tight",
            [&] { return entry_tight(k2_components(3), 2, "degree_classes.lower"); });
  run.check("k2_components(2) danger_sum.upper tight",
            [&] { return entry_tight(k2_components(2), 2, "danger_sum.upper"); });
  run.check("star(7) tree.upper tight", [&] {
    const int u = solve_exact(star_graph(7), TurnSchedule::standard(), options.solver).value;
    return entry_tight(star_graph(7), u, "tree.upper");
  });
  run.check("gadget24 closed forms", [&] {
    const BoundsReport r = closed_form_bounds(gadget24());
    const bool ok = r.entry("cubic.upper").tightened == 3 &&
                    r.entry("degree_classes.upper").tightened == 6 &&
                    r.entry("danger_sum.upper").tightened == 3 &&
                    r.entry("danger_sum.lower").raw == Rational(-19, 8) &&
                    r.entry("danger_sum.lower").tightened == 0;
    return Verdict{ok, "cubic.upper=" + std::to_string(r.entry("cubic.upper").tightened) +
                           " degree_classes.upper=" +
                           std::to_string(r.entry("degree_classes.upper").tightened) +
                           " danger_sum=[" + r.entry("danger_sum.lower").raw.to_string() + ", " +
                           r.entry("danger_sum.upper").raw.to_string() + "]"};
  });
  run.check("refinement lowers the two-hub graph by 1/8", [&] {
    const Graph g = two_hub_graph();
    const Rational refined = refined_upper_bound(g);
    const int u = solve_exact(g, TurnSchedule::standard(), options.solver).value;
    const bool ok = danger_sum(g) - refined == Rational(1, 8) && Rational(u) <= refined;
    return Verdict{ok, "danger sum " + danger_sum(g).to_string() + ", refined " +
                           refined.to_string() + ", u = " + std::to_string(u)};
  });
  run.check("refinement leaves regular graphs and stars unchanged", [&] {
    FailureList failures;
    const std::vector<std::pair<std::string, Graph>> graphs = {
        {"k4_components(1)", k4_components(1)},
        {"circulant(8,1,2)", circulant_graph(8, {1, 2})},
        {"cycle(9)", cycle_graph(9)},
        {"star(5)", star_graph(5)}};
    for (const auto& [label, g] : graphs) {
      if (refined_upper_bound(g) != danger_sum(g)) failures.add(label);
    }
    return failures.verdict(static_cast<int>(graphs.size()), "unchanged");
  });
  return run.take();
}

// ---------------------------------------------------------------------------
// danger-conservation

std::vector<CheckResult> danger_conservation(const VerifyOptions& options) {
  SuiteRun run("danger-conservation", options);
  const auto corpus = default_corpus(options.corpus_seed);
  run.check(std::to_string(options.trials) + " random playouts", [&] {
    std::mt19937_64 rng(options.seed);
    long moves = 0;
    FailureList failures;
    for (int t = 0; t < options.trials; ++t) {
      const auto& entry = corpus[uniform_below(rng, corpus.size())];
      GameState s(entry.graph);
      DyadicValue total = total_danger(s);
      std::vector<EdgeId> free_edges;
      while (!s.is_terminal()) {
        free_edges.clear();
        for (EdgeId e = 0; e < entry.graph.num_edges(); ++e) {
          if (s.is_free(e)) free_edges.push_back(e);
        }
        const EdgeId e = free_edges[uniform_below(rng, free_edges.size())];
        const Player mover = s.whose_turn();
        const Edge& ed = entry.graph.edge(e);
        const DyadicValue endpoints = danger(s, ed.u) + danger(s, ed.v);
        s.apply(e);
        ++moves;
        const DyadicValue next = total_danger(s);
        const DyadicValue expected = mover == Player::kToucher ? total - endpoints
                                                               : total + endpoints;
        if (next != expected) {
          failures.add("trial " + std::to_string(t) + " " + entry.name + " move " +
                       std::to_string(s.moves_made()) + ": " + next.to_string() +
                       " != " + expected.to_string());
        }
        total = next;
      }
      if (total != DyadicValue(untouched_count(s))) {
        failures.add("trial " + std::to_string(t) + " " + entry.name + ": terminal danger " +
                     total.to_string() + " != untouched " +
                     std::to_string(untouched_count(s)));
      }
    }
    Verdict v = failures.verdict(options.trials, "exact conservation");
    if (v.passed) v.details = std::to_string(options.trials) + " playouts, " +
                              std::to_string(moves) + " moves, every delta exact";
    return v;
  });
  return run.take();
}

// ---------------------------------------------------------------------------
// strategy-guarantees

int best_response(const Graph& g, Player fixed_side, const Strategy& s,
                  const SolverOptions& options) {
  return best_response_value(g, TurnSchedule::standard(), fixed_side, s, options).value;
}

std::vector<CheckResult> strategy_guarantees(const VerifyOptions& options) {
  SuiteRun run("strategy-guarantees", options);
  const SolverOptions& so = options.solver;
  const auto corpus = small_corpus(options, options.max_edges);

  for (const auto& [label, g] : std::vector<std::pair<std::string, Graph>>{
           {"complete(5)", circulant_graph(5, {1, 2})},
           {"circulant(8,1,2)", circulant_graph(8, {1, 2})}}) {
    run.check("pairing toucher on " + label, [&, &g = g] {
      return expect_eq(best_response(g, Player::kToucher, *pairing_toucher(g), so), 0, "value");
    });
  }

  run.check("max_danger toucher <= floor(danger sum) on corpus", [&] {
    FailureList failures;
    for (const auto& e : corpus) {
      const int v = best_response(e.graph, Player::kToucher, *max_danger_toucher(), so);
      const std::int64_t bound = danger_sum(e.graph).floor();
      if (v > bound) failures.add(e.name + ": " + std::to_string(v) + " > " + std::to_string(bound));
    }
    return failures.verdict(static_cast<int>(corpus.size()), "upper guarantee holds");
  });

  run.check("max_danger isolator >= ceil(danger sum - (|E|+7)/8) on corpus", [&] {
    FailureList failures;
    for (const auto& e : corpus) {
      const int v = best_response(e.graph, Player::kIsolator, *max_danger_isolator(), so);
      const std::int64_t bound =
          (danger_sum(e.graph) - Rational(e.graph.num_edges() + 7, 8)).ceil();
      if (v < bound) failures.add(e.name + ": " + std::to_string(v) + " < " + std::to_string(bound));
    }
    return failures.verdict(static_cast<int>(corpus.size()), "lower guarantee holds");
  });

  for (int n : {17, 19}) {
    run.check("cycle_segment isolator on cycle(" + std::to_string(n) + ")", [&, n] {
      const Graph g = cycle_graph(n);
      return expect_ge(best_response(g, Player::kIsolator, *cycle_segment_isolator(g), so),
                       Rational(3 * (n - 3), 16).ceil(), "value");
    });
  }
  for (int n : {7, 10, 18}) {
    run.check("path_segment isolator on path(" + std::to_string(n) + ")", [&, n] {
      const Graph g = path_graph(n);
      return expect_ge(best_response(g, Player::kIsolator, *path_segment_isolator(g), so),
                       Rational(3 * (n - 2), 16).ceil(), "value");
    });
  }
  for (const auto& [label, g] : std::vector<std::pair<std::string, Graph>>{
           {"c3_components(2)", c3_components(2)},
           {"cycle(9)", cycle_graph(9)},
           {"c3_components(3)", c3_components(3)}}) {
    run.check("two_regular isolator on " + label, [&, &g = g] {
      return expect_ge(best_response(g, Player::kIsolator, *two_regular_isolator(g), so),
                       Rational(g.num_vertices() - 3, 6).ceil(), "value");
    });
  }
  for (int c : {1, 2}) {
    run.check("k4_components toucher on " + std::to_string(c) + " component(s)", [&, c] {
      const Graph g = k4_components(c);
      return expect_eq(best_response(g, Player::kToucher, *k4_components_toucher(g), so), 0,
                       "value");
    });
  }
  run.check("c3_components toucher on 3 components", [&] {
    const Graph g = c3_components(3);
    return expect_eq(best_response(g, Player::kToucher, *c3_components_toucher(g), so), 1, "value");
  });
  run.check("c3_components toucher on 5 components", [&] {
    const Graph g = c3_components(5);
    return expect_eq(best_response(g, Player::kToucher, *c3_components_toucher(g), so), 2, "value");
  });
  run.check("max_danger isolator on path(6)", [&] {
    const Graph g = path_graph(6);
    return expect_ge(best_response(g, Player::kIsolator, *max_danger_isolator(), so), 1, "value");
  });

  run.check("pairing toucher within its per-variant ceiling on corpus", [&] {
    FailureList failures;
    for (const auto& e : corpus) {
      for (PairingVariant variant : {PairingVariant::kIncoming, PairingVariant::kOutgoing}) {
        const PairingPlan plan = build_pairing_plan(e.graph, variant);
        const int v =
            best_response(e.graph, Player::kToucher, *pairing_toucher(e.graph, variant), so);
        const int bound = pairing_guarantee(e.graph, plan);
        if (v > bound) {
          failures.add(e.name + (variant == PairingVariant::kIncoming ? " in: " : " out: ") +
                       std::to_string(v) + " > " + std::to_string(bound));
        }
      }
    }
    return failures.verdict(static_cast<int>(corpus.size()), "both variants within ceiling");
  });

  run.check("better pairing variant <= floor(degree_classes.upper) on corpus", [&] {
    FailureList failures;
    for (const auto& e : corpus) {
      const int in = best_response(e.graph, Player::kToucher,
                                   *pairing_toucher(e.graph, PairingVariant::kIncoming), so);
      const int out = best_response(e.graph, Player::kToucher,
                                    *pairing_toucher(e.graph, PairingVariant::kOutgoing), so);
      const std::int64_t bound = closed_form_bounds(e.graph).entry("degree_classes.upper").tightened;
      if (std::min(in, out) > bound) {
        failures.add(e.name + ": min(" + std::to_string(in) + "," + std::to_string(out) +
                     ") > " + std::to_string(bound));
      }
    }
    return failures.verdict(static_cast<int>(corpus.size()), "averaged pairing bound holds");
  });
  return run.take();
}

// ---------------------------------------------------------------------------
// h3-subgame

// The third gadget block in isolation: its 11 edges are the region, the
// connector e23 at its v4 port is Isolator's, Isolator moves first and
// Toucher may pass (standing for a move elsewhere in the gadget). The other
// connector e13 at its v5 port lies outside the region; it is preclaimed
// for Toucher, the pessimistic choice for Isolator, unless `optimistic`.
SubgameSpec block_kernel_spec(bool optimistic, bool toucher_may_pass) {
  SubgameSpec spec;
  for (EdgeId e = 22; e <= 32; ++e) spec.region.push_back(e);
  spec.preclaimed[kGadgetE23] = Player::kIsolator;
  spec.preclaimed[kGadgetE13] = optimistic ? Player::kIsolator : Player::kToucher;
  spec.first_mover = Player::kIsolator;
  if (toucher_may_pass) spec.pass_allowed.insert(Player::kToucher);
  for (VertexId v = 16; v < 24; ++v) spec.objective.push_back(v);
  return spec;
}

std::vector<CheckResult> block_kernel_subgame(const VerifyOptions& options) {
  SuiteRun run("h3-subgame", options);
  const Graph g = gadget24();
  int with_pass = -1;
  run.check("gadget block kernel, Toucher may pass", [&] {
    const SolveResult r = solve_subgame(g, block_kernel_spec(false, true), options.solver);
    with_pass = r.value;
    Verdict v = expect_ge(r.value, 1, "value");
    char buffer[96];
    std::snprintf(buffer, sizeof buffer, ", %llu nodes, %.1f ms",
                  static_cast<unsigned long long>(r.nodes_expanded), r.elapsed.count());
    v.details += buffer;
    const bool fast = r.elapsed.count() < 1000.0;
    if (!fast) v.details += " (over 1 s)";
    v.passed = v.passed && fast;
    return v;
  });
  run.check("passing never raises the kernel value", [&] {
    const int no_pass = solve_subgame(g, block_kernel_spec(false, false), options.solver).value;
    const int pass = with_pass >= 0 ? with_pass
                                    : solve_subgame(g, block_kernel_spec(false, true), options.solver).value;
    return Verdict{pass <= no_pass, "with pass " + std::to_string(pass) + ", without " +
                                        std::to_string(no_pass)};
  });
  run.check("gadget block kernel, both connectors Isolator's", [&] {
    return expect_ge(solve_subgame(g, block_kernel_spec(true, true), options.solver).value, 1, "value");
  });
  run.check("objective vertex already isolated", [&] {
    // Isolator owns both edges at a triangle vertex before the region starts.
    const Graph t = cycle_graph(3);
    SubgameSpec spec;
    spec.region = {1};
    spec.preclaimed = {{0, Player::kIsolator}, {2, Player::kIsolator}};
    spec.objective = {0};
    return expect_ge(solve_subgame(t, spec, options.solver).value, 1, "value");
  });
  run.check("single-edge region", [&] {
    const Graph p = path_graph(2);
    SubgameSpec spec;
    spec.region = {0};
    spec.objective = {0, 1};
    return expect_eq(solve_subgame(p, spec, options.solver).value, 0, "value");
  });
  run.check("full gadget exceeds the exact-solver ceiling", [&] {
    try {
      solve_exact(g, TurnSchedule::standard(), options.solver);
    } catch (const SolverError& e) {
      return Verdict{e.kind() == SolverError::Kind::kCeilingExceeded, e.what()};
    }
    return Verdict{false, "solve_exact accepted a 36-edge graph"};
  });
  return run.take();
}

// ---------------------------------------------------------------------------
// exploratory-table

std::vector<CheckResult> exploratory_table(const VerifyOptions& options) {
  SuiteRun run("exploratory-table", options);
  struct Sweep {
    std::string family;
    std::vector<int> sizes;
    std::function<std::pair<std::int64_t, std::int64_t>(int)> interval;
  };
  auto range = [](int lo, int hi, int step) {
    std::vector<int> v;
    for (int i = lo; i <= hi; i += step) v.push_back(i);
    return v;
  };
  const std::vector<Sweep> sweeps = {
      {"cycle", range(3, 12, 1),
       [](int n) { return std::pair{Rational(3 * (n - 3), 16).ceil(), std::int64_t{n / 4}}; }},
      {"path", range(2, 12, 1),
       [](int n) {
         return std::pair{Rational(3 * (n - 2), 16).ceil(), std::int64_t{(n + 1) / 4}};
       }},
      {"star", range(3, 15, 2),
       [](int n) { return std::pair{std::int64_t{(n - 1) / 2}, std::int64_t{(n - 1) / 2}}; }},
  };
  for (const auto& sweep : sweeps) {
    run.check(sweep.family + " sweep", [&] {
      ExperimentConfig config;
      config.family = FamilySpec{};
      config.family->family = sweep.family;
      config.sizes = sweep.sizes;
      config.solver = options.solver;
      config.timings = false;
      std::ostringstream csv;
      const ExperimentOutcome outcome = run_experiment(config, csv);
      if (outcome.aborted) return Verdict{false, "aborted: " + outcome.abort_message};
      FailureList failures;
      std::string values;
      for (const auto& row : outcome.rows) {
        const auto [lo, hi] = sweep.interval(row.n);
        values += (values.empty() ? "" : " ") + std::to_string(row.value);
        if (row.value < lo || row.value > hi) {
          failures.add("n=" + std::to_string(row.n) + ": " + std::to_string(row.value) +
                       " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
      }
      // Two header lines plus one line per row.
      const std::string text = csv.str();
      const auto lines = std::count(text.begin(), text.end(), '\n');
      if (lines != static_cast<long>(sweep.sizes.size()) + 2 ||
          text.rfind(std::string("# ") + kExperimentSchema, 0) != 0) {
        failures.add("malformed CSV");
      }
      Verdict v = failures.verdict(static_cast<int>(outcome.rows.size()), "within interval");
      if (v.passed) v.details = "u = " + values + ", every ratio within its interval";
      return v;
    });
  }
  return run.take();
}

// ---------------------------------------------------------------------------
// solver-consistency

std::vector<CheckResult> solver_consistency(const VerifyOptions& options) {
  SuiteRun run("solver-consistency", options);
  const auto corpus = small_corpus(options, options.max_edges);

  run.check("alpha-beta equals plain minimax (<= 10 edges)", [&] {
    FailureList failures;
    int total = 0;
    for (const auto& e : corpus) {
      if (e.graph.num_edges() > 10) continue;
      ++total;
      const int fast = solve_exact(e.graph, TurnSchedule::standard(), options.solver).value;
      const int reference = minimax_reference(GameState(e.graph));
      if (fast != reference) {
        failures.add(e.name + ": " + std::to_string(fast) + " vs " + std::to_string(reference));
      }
    }
    return failures.verdict(total, "identical values");
  });

  run.check("20 random edge relabelings per graph", [&] {
    std::mt19937_64 rng(options.seed);
    FailureList failures;
    for (const auto& e : corpus) {
      const int base = solve_exact(e.graph, TurnSchedule::standard(), options.solver).value;
      for (int k = 0; k < 20; ++k) {
        const auto perm = random_permutation(rng, e.graph.num_edges());
        const Graph relabelled = permute_edges(e.graph, perm);
        const int v = solve_exact(relabelled, TurnSchedule::standard(), options.solver).value;
        if (v != base) {
          failures.add(e.name + " relabeling " + std::to_string(k) + ": " + std::to_string(v) +
                       " vs " + std::to_string(base));
        }
      }
    }
    return failures.verdict(static_cast<int>(corpus.size()), "invariant");
  });

  run.check("transposition table on/off agree", [&] {
    SolverOptions off = options.solver;
    off.transposition_table = false;
    FailureList failures;
    for (const auto& e : corpus) {
      const int with = solve_exact(e.graph, TurnSchedule::standard(), options.solver).value;
      const int without = solve_exact(e.graph, TurnSchedule::standard(), off).value;
      if (with != without) {
        failures.add(e.name + ": " + std::to_string(with) + " vs " + std::to_string(without));
      }
    }
    return failures.verdict(static_cast<int>(corpus.size()), "identical values");
  });

  run.check("dead-edge pruning and alpha-beta toggles agree", [&] {
    SolverOptions plain = options.solver;
    plain.prune_dead_edges = false;
    plain.alpha_beta = false;
    FailureList failures;
    for (const auto& e : corpus) {
      const int with = solve_exact(e.graph, TurnSchedule::standard(), options.solver).value;
      const int without = solve_exact(e.graph, TurnSchedule::standard(), plain).value;
      if (with != without) {
        failures.add(e.name + ": " + std::to_string(with) + " vs " + std::to_string(without));
      }
    }
    return failures.verdict(static_cast<int>(corpus.size()), "identical values");
  });
  return run.take();
}

// ---------------------------------------------------------------------------
// strategy-legality

bool all_components_are(const Graph& g, int vertices, int edges) {
  const auto comps = g.components();
  const auto comp_of = g.component_of_vertices();
  std::vector<int> edge_count(comps.size(), 0);
  for (const Edge& e : g.edges()) ++edge_count[comp_of[e.u]];
  for (size_t c = 0; c < comps.size(); ++c) {
    if (static_cast<int>(comps[c].size()) != vertices || edge_count[c] != edges) return false;
  }
  return !comps.empty();
}

bool applicable(const std::string& name, const Graph& g) {
  if (name == "cycle_segment") return is_cycle(g);
  if (name == "path_segment") return is_path(g);
  if (name == "two_regular") return is_two_regular(g);
  if (name == "k4_components") return all_components_are(g, 4, 6);
  if (name == "c3_components") {
    return all_components_are(g, 3, 3) && g.components().size() % 2 == 1;
  }
  return g.num_edges() > 0;
}

std::vector<CheckResult> strategy_legality(const VerifyOptions& options) {
  SuiteRun run("strategy-legality", options);
  std::vector<std::pair<std::string, Graph>> graphs;
  for (auto& e : default_corpus(options.corpus_seed)) graphs.emplace_back(e.name, std::move(e.graph));
  for (int n = 3; n <= 40; ++n) graphs.emplace_back("cycle(" + std::to_string(n) + ")", cycle_graph(n));
  for (int n = 2; n <= 40; ++n) graphs.emplace_back("path(" + std::to_string(n) + ")", path_graph(n));
  for (int c : {1, 3, 5, 7}) {
    graphs.emplace_back("c3_components(" + std::to_string(c) + ")", c3_components(c));
  }
  for (int c : {1, 2, 3}) {
    graphs.emplace_back("k4_components(" + std::to_string(c) + ")", k4_components(c));
    graphs.emplace_back("c4_components(" + std::to_string(c) + ")", c4_components(c));
  }
  graphs.emplace_back("cycles(3,4,5)", disjoint_union({cycle_graph(3), cycle_graph(4), cycle_graph(5)}));
  graphs.emplace_back("cycles(7,8,9,10)", disjoint_union({cycle_graph(7), cycle_graph(8),
                                                          cycle_graph(9), cycle_graph(10)}));
  graphs.emplace_back("cycles(6,11,12,17,22)",
                      disjoint_union({cycle_graph(6), cycle_graph(11), cycle_graph(12),
                                      cycle_graph(17), cycle_graph(22)}));
  graphs.emplace_back("gadget24", gadget24());

  struct Entry {
    std::string spec;
    Player side;
  };
  const std::vector<Entry> strategies = {
      {"max_danger", Player::kToucher},    {"max_danger", Player::kIsolator},
      {"pairing", Player::kToucher},       {"pairing(out)", Player::kToucher},
      {"k4_components", Player::kToucher}, {"c3_components", Player::kToucher},
      {"leaf_priority", Player::kIsolator}, {"cycle_segment", Player::kIsolator},
      {"path_segment", Player::kIsolator}, {"two_regular", Player::kIsolator},
  };
  const int seeds = std::max(1, std::min(options.trials, 1000) / 200);

  for (const auto& strategy : strategies) {
    run.check(strategy.spec + " (" + player_name(strategy.side) + ")", [&] {
      FailureList failures;
      int matches = 0;
      const std::string base = parse_strategy_spec(strategy.spec).name;
      for (const auto& [label, g] : graphs) {
        if (!applicable(base, g)) continue;
        for (const TurnSchedule& schedule :
             {TurnSchedule::standard(), TurnSchedule::alternating_from(Player::kIsolator)}) {
          for (int k = 0; k <= seeds; ++k) {
            // k == 0: the max_danger opponent; otherwise a seeded random one.
            const std::string rival =
                k == 0 ? "max_danger"
                       : "random(" + std::to_string(options.seed * 1000 + k) + ")";
            auto mine = make_strategy(strategy.spec, strategy.side, g);
            auto theirs = make_strategy(rival, opponent(strategy.side), g);
            Strategy& t = strategy.side == Player::kToucher ? *mine : *theirs;
            Strategy& i = strategy.side == Player::kToucher ? *theirs : *mine;
            try {
              const MatchResult first = play_match(g, schedule, t, i);
              const MatchResult second = play_match(g, schedule, t, i);
              ++matches;
              if (first.log != second.log) failures.add(label + ": nondeterministic replay");
            } catch (const std::exception& e) {
              failures.add(label + " vs " + rival + ": " + e.what());
            }
          }
        }
      }
      Verdict v = failures.verdict(matches, "legal");
      if (v.passed) v.details = std::to_string(matches) + " matches, all legal and repeatable";
      return v;
    });
  }
  return run.take();
}

using SuiteFn = std::vector<CheckResult> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"solver-regression", solver_regression},
      {"bound-sandwich", bound_sandwich},
      {"danger-conservation", danger_conservation},
      {"strategy-guarantees", strategy_guarantees},
      {"h3-subgame", block_kernel_subgame},
      {"exploratory-table", exploratory_table},
      {"solver-consistency", solver_consistency},
      {"strategy-legality", strategy_legality},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  for (const auto& [name, fn] : registry()) {
    if (name == suite) return fn(options);
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::string format_check(const CheckResult& check) {
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1f ms", check.elapsed_ms);
  return std::string(check.passed ? "PASS " : "FAIL ") + check.suite + "/" + check.name + " (" +
         timing + "): " + check.details;
}

std::string verify_report_json(const std::vector<CheckResult>& checks,
                               const VerifyOptions& options) {
  nlohmann::ordered_json doc;
  bool passed = true;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    passed = passed && c.passed;
    list.push_back({{"suite", c.suite},
                    {"name", c.name},
                    {"status", c.passed ? "pass" : "fail"},
                    {"elapsed_ms", c.elapsed_ms},
                    {"details", c.details}});
  }
  nlohmann::ordered_json corpus = nlohmann::ordered_json::array();
  for (const auto& e : default_corpus(options.corpus_seed)) {
    corpus.push_back({{"name", e.name},
                      {"vertices", e.graph.num_vertices()},
                      {"edges", e.graph.num_edges()},
                      {"tight_example", e.tight_example}});
  }
  doc["passed"] = passed;
  doc["corpus_seed"] = options.corpus_seed;
  doc["seed"] = options.seed;
  doc["checks"] = std::move(list);
  doc["corpus"] = std::move(corpus);
  return doc.dump(2);
}

}  // namespace toucher
