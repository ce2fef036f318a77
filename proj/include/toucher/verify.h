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

#ifndef TOUCHER_VERIFY_H_
#define TOUCHER_VERIFY_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "toucher/corpus.h"
#include "toucher/solver.h"

namespace toucher {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string details;
  double elapsed_ms = 0;
};

struct VerifyOptions {
  std::uint64_t corpus_seed = kDefaultCorpusSeed;
  // Seed of the random playouts and relabelings.
  std::uint64_t seed = 7;
  int trials = 1000;
  SolverOptions solver;
  // Corpus graphs above this many edges are skipped by corpus-wide checks.
  int max_edges = 14;
  // Optional: one line per finished check, as it finishes.
  std::ostream* progress = nullptr;
};

// Suites, in default run order:
//   solver-regression     exact values of the small extremal examples
//   bound-sandwich        every applicable closed-form bound contains u
//   danger-conservation   exact potential bookkeeping over random playouts
//   strategy-guarantees   best-response certificates for the strategies
//   h3-subgame            gadget block kernel with Toucher passes
//   exploratory-table     exact cycle/path/star sweeps against intervals
//   solver-consistency    alpha-beta vs plain minimax, relabelings, table
//   strategy-legality     strategies stay legal against random opponents
std::vector<std::string> suite_names();

// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options = {});

// "PASS suite/name (12.3 ms): details"
std::string format_check(const CheckResult& check);
// Single JSON object {"checks": [...], "passed": bool, "corpus": [...]}.
std::string verify_report_json(const std::vector<CheckResult>& checks,
                               const VerifyOptions& options);

}  // namespace toucher

#endif  // TOUCHER_VERIFY_H_
