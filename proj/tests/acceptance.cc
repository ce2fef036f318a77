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

// Acceptance run: one PASS/FAIL line per criterion, followed by the failing
// checks (if any). Exit status 0 iff every reproducible criterion and every
// substitute check passes.
//
// Usage: acceptance [output-dir]   (writes exploratory_table.csv there)

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "toucher/experiment.h"
#include "toucher/verify.h"

namespace {

using namespace toucher;

struct Criterion {
  int number;
  std::string title;
  std::string tolerance;
  std::string suite;
  // Selects the checks of `suite` that make up the criterion.
  std::function<bool(const CheckResult&)> selects;
};

bool any(const CheckResult&) { return true; }

struct Tally {
  int passed = 0;
  int total = 0;
  double elapsed_ms = 0;
  std::vector<const CheckResult*> failures;

  bool ok() const { return total > 0 && passed == total; }
};

Tally tally(const std::vector<CheckResult>& checks, const Criterion& c) {
  Tally t;
  for (const auto& check : checks) {
    if (!c.selects(check)) continue;
    ++t.total;
    t.elapsed_ms += check.elapsed_ms;
    if (check.passed) {
      ++t.passed;
    } else {
      t.failures.push_back(&check);
    }
  }
  return t;
}

std::string seconds(double ms) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.1f s", ms / 1000.0);
  return buffer;
}

void print_line(const std::string& label, bool ok, const std::string& title, const Tally& t,
                const std::string& tolerance) {
  std::cout << label << ": " << (ok ? "PASS" : "FAIL") << "  " << title << " ["
            << t.passed << "/" << t.total << " checks, " << tolerance << ", "
            << seconds(t.elapsed_ms) << "]\n";
  for (const CheckResult* f : t.failures) {
    std::cout << "    failed " << f->suite << "/" << f->name << ": " << f->details << '\n';
  }
}

bool write_table(const std::string& dir) {
  ExperimentConfig config;
  config.timings = false;
  std::ofstream out(dir + "/exploratory_table.csv");
  if (!out) return false;
  bool ok = true;
  for (const auto& [family, lo, hi] :
       std::vector<std::tuple<std::string, int, int>>{{"cycle", 3, 12}, {"path", 2, 12}}) {
    config.family = FamilySpec{};
    config.family->family = family;
    config.sizes.clear();
    for (int n = lo; n <= hi; ++n) config.sizes.push_back(n);
    std::ostringstream part;
    ok = !run_experiment(config, part).aborted && ok;
    // Keep a single schema header for the combined file.
    std::string text = part.str();
    if (family != "cycle") text = text.substr(text.find('\n', text.find('\n') + 1) + 1);
    out << text;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out_dir = argc > 1 ? argv[1] : ".";
  VerifyOptions options;

  auto named = [](std::string prefix) {
    return [prefix](const CheckResult& c) { return c.name.rfind(prefix, 0) == 0; };
  };
  const std::vector<Criterion> criteria = {
      {1, "solver regression on the extremal examples", "exact", "solver-regression", any},
      {2, "closed-form bounds sandwich u on the <=14-edge corpus",
       "exact integers after tightening", "bound-sandwich", any},
      {3, "danger conservation over seeded random playouts", "exact dyadic equality",
       "danger-conservation", any},
      {4, "strategy guarantees by best-response search", "exact", "strategy-guarantees", any},
      {5, "gadget block kernel with Toucher passes has value >= 1", "exact, < 1 s",
       "h3-subgame", named("gadget block kernel, Toucher may pass")},
      {7, "exact cycle/path/star sweep within the closed-form intervals", "exact",
       "exploratory-table", any},
      {8, "alpha-beta vs plain minimax and 20 relabelings per graph", "exact",
       "solver-consistency", any},
  };

  std::map<std::string, std::vector<CheckResult>> results;
  for (const auto& name : suite_names()) {
    std::cerr << "running " << name << "...\n";
    results[name] = run_suite(name, options);
  }

  bool all_ok = true;
  std::map<int, bool> status;
  for (const auto& c : criteria) {
    const Tally t = tally(results[c.suite], c);
    status[c.number] = t.ok();
    all_ok = all_ok && t.ok();
    if (c.number == 7) {
      const bool written = write_table(out_dir);
      all_ok = all_ok && written;
      print_line("criterion " + std::to_string(c.number), t.ok() && written, c.title, t, c.tolerance);
      std::cout << "    table: " << out_dir << "/exploratory_table.csv"
                << (written ? "" : " (NOT WRITTEN)") << '\n';
    } else {
      print_line("criterion " + std::to_string(c.number), t.ok(), c.title, t, c.tolerance);
    }
    if (c.number == 5) {
      // Criterion 6 is stated rather than reproduced; report its substitutes.
      const Criterion ceiling{6, "", "", "h3-subgame",
                              named("full gadget exceeds the exact-solver ceiling")};
      const Tally beyond = tally(results["h3-subgame"], ceiling);
      all_ok = all_ok && beyond.ok();
      std::cout << "criterion 6: NOT REPRODUCIBLE  the full 36-edge gadget value and the "
                   "asymptotic ratio are beyond exhaustive search; substitutes: kernel "
                   "(criterion 5) "
                << (status[5] ? "PASS" : "FAIL")
                << ", exact ratio sweep (criterion 7, reported below), 36-edge gadget rejected "
                   "by the exact solver "
                << (beyond.ok() ? "PASS" : "FAIL") << '\n';
    }
  }
  const Criterion legality{0, "", "", "strategy-legality", any};
  const Tally extra = tally(results["strategy-legality"], legality);
  all_ok = all_ok && extra.ok();
  print_line("additional", extra.ok(), "strategies stay legal against random opponents", extra,
             "exact");

  Tally everything;
  for (const auto& [suite, checks] : results) {
    for (const auto& c : checks) {
      ++everything.total;
      everything.passed += c.passed ? 1 : 0;
    }
  }
  std::cout << (all_ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << ": " << everything.passed
            << "/" << everything.total << " checks passed\n";
  return all_ok ? 0 : 1;
}
