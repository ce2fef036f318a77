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

#ifndef TOUCHER_EXPERIMENT_H_
#define TOUCHER_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "toucher/game.h"
#include "toucher/generators.h"
#include "toucher/solver.h"

namespace toucher {

inline constexpr const char* kExperimentSchema = "toucher-lab v1";

enum class ExperimentMode { kExact, kMatch };
enum class OutputFormat { kCsv, kJson };

// One sweep. Exactly one input source: a family with a list of sizes (n for
// cycle/path/star/circulant, the count for component families), or a list
// of graph files.
struct ExperimentConfig {
  std::optional<FamilySpec> family;
  std::vector<int> sizes;
  std::vector<std::string> files;

  ExperimentMode mode = ExperimentMode::kExact;
  // Match mode only: strategy references for each side.
  std::string toucher = "max_danger";
  std::string isolator = "max_danger";

  TurnSchedule schedule = TurnSchedule::standard();
  OutputFormat format = OutputFormat::kCsv;
  // Substituted for the argument of random strategies given without one.
  std::uint64_t seed = 1;
  SolverOptions solver;
  int threads = 1;
  // When false, elapsed_ms is left empty so output is byte-identical
  // across runs.
  bool timings = true;
};

// Throws std::invalid_argument describing the first problem found.
void validate(const ExperimentConfig& config);

// n is the vertex count; ratio = value / n. lower/upper are the strongest
// applicable closed-form bounds. nodes is 0 in match mode.
struct ExperimentRow {
  std::string family;
  int n = 0;
  int value = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  ExperimentMode mode = ExperimentMode::kExact;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
  double ratio = 0;
};

struct ExperimentOutcome {
  // Rows in input order, up to (not including) the first failed instance.
  std::vector<ExperimentRow> rows;
  bool aborted = false;
  std::optional<SolverError::Kind> abort_kind;
  std::string abort_message;
};

// Runs every instance on a pool of config.threads workers and writes the
// rows to `out` in input order (CSV rows are flushed as they become
// available; JSON is written once at the end). Stops at the first solver
// error after writing every row before it. Graph-file and strategy errors
// propagate as exceptions.
ExperimentOutcome run_experiment(const ExperimentConfig& config, std::ostream& out);

std::string mode_name(ExperimentMode mode);
std::vector<std::string> experiment_columns();
std::string format_csv_row(const ExperimentRow& row, bool timings);

}  // namespace toucher

#endif  // TOUCHER_EXPERIMENT_H_
