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

#include "toucher/experiment.h"

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "toucher/bounds.h"
#include "toucher/match.h"
#include "toucher/strategy.h"

namespace toucher {

namespace {

struct Instance {
  std::string label;
  Graph graph;
};

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::vector<Instance> load_instances(const ExperimentConfig& config) {
  std::vector<Instance> instances;
  if (config.family) {
    for (int size : config.sizes) {
      FamilySpec spec = *config.family;
      if (family_uses_n(spec.family)) {
        spec.n = size;
      } else {
        spec.count = size;
      }
      instances.push_back({spec.family, generate(spec)});
    }
  } else {
    for (const auto& path : config.files) {
      instances.push_back({std::filesystem::path(path).stem().string(), read_graph_file(path)});
    }
  }
  return instances;
}

std::string with_seed(const std::string& spec, std::uint64_t seed) {
  return spec == "random" ? "random(" + std::to_string(seed) + ")" : spec;
}

ExperimentRow evaluate(const ExperimentConfig& config, const Instance& instance) {
  ExperimentRow row;
  row.family = instance.label;
  row.n = instance.graph.num_vertices();
  row.mode = config.mode;
  const BoundsReport bounds = closed_form_bounds(instance.graph);
  row.lower = bounds.best_lower();
  row.upper = bounds.best_upper();
  if (config.mode == ExperimentMode::kExact) {
    const SolveResult r = solve_exact(instance.graph, config.schedule, config.solver);
    row.value = r.value;
    row.nodes = r.nodes_expanded;
    row.elapsed_ms = r.elapsed.count();
  } else {
    const auto start = std::chrono::steady_clock::now();
    auto toucher = make_strategy(with_seed(config.toucher, config.seed), Player::kToucher,
                                 instance.graph);
    auto isolator = make_strategy(with_seed(config.isolator, config.seed), Player::kIsolator,
                                  instance.graph);
    const MatchResult m = play_match(instance.graph, config.schedule, *toucher, *isolator);
    row.value = m.untouched;
    row.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  row.ratio = row.n == 0 ? 0.0 : static_cast<double>(row.value) / row.n;
  return row;
}

std::string format_fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

// Results of one instance, filled by a worker.
struct Slot {
  bool done = false;
  std::optional<ExperimentRow> row;
  std::exception_ptr error;
};

}  // namespace

std::string mode_name(ExperimentMode mode) {
  return mode == ExperimentMode::kExact ? "exact" : "match";
}

std::vector<std::string> experiment_columns() {
  return {"family", "n",    "u_or_match_value", "lower_bound", "upper_bound",
          "mode",   "nodes", "elapsed_ms",      "ratio"};
}

std::string format_csv_row(const ExperimentRow& row, bool timings) {
  std::ostringstream out;
  out << row.family << ',' << row.n << ',' << row.value << ',' << row.lower << ','
      << row.upper << ',' << mode_name(row.mode) << ',' << row.nodes << ','
      << (timings ? format_fixed(row.elapsed_ms, 3) : "") << ',' << format_fixed(row.ratio, 6);
  return out.str();
}

void validate(const ExperimentConfig& config) {
  const bool has_family = config.family.has_value();
  const bool has_files = !config.files.empty();
  if (has_family == has_files) {
    throw std::invalid_argument("experiment needs exactly one input: a family or graph files");
  }
  if (has_family && config.sizes.empty()) {
    throw std::invalid_argument("experiment family sweep needs at least one size");
  }
  if (config.solver.edge_ceiling <= 0) throw std::invalid_argument("edge ceiling must be positive");
  if (config.solver.node_budget == 0) throw std::invalid_argument("node budget must be positive");
  if (config.threads <= 0) throw std::invalid_argument("thread count must be positive");
}

ExperimentOutcome run_experiment(const ExperimentConfig& config, std::ostream& out) {
  validate(config);
  const std::vector<Instance> instances = load_instances(config);
  const bool csv = config.format == OutputFormat::kCsv;
  if (csv) {
    out << "# " << kExperimentSchema << '\n';
    const auto columns = experiment_columns();
    for (size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n' << std::flush;
  }

  std::vector<Slot> slots(instances.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      Slot result;
      try {
        result.row = evaluate(config, instances[i]);
      } catch (...) {
        result.error = std::current_exception();
        stop.store(true);
      }
      {
        std::lock_guard lock(mutex);
        result.done = true;
        slots[i] = std::move(result);
      }
      ready.notify_all();
    }
  };

  const int workers = std::min<int>(config.threads, std::max<size_t>(instances.size(), 1));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);

  ExperimentOutcome outcome;
  std::exception_ptr failure;
  for (size_t i = 0; i < instances.size(); ++i) {
    std::unique_lock lock(mutex);
    // Indices are handed out in increasing order, so every instance before
    // the first failure was started and will complete.
    ready.wait(lock, [&] { return slots[i].done; });
    Slot slot = std::move(slots[i]);
    lock.unlock();
    if (slot.error) {
      failure = slot.error;
      break;
    }
    outcome.rows.push_back(*slot.row);
    if (csv) out << format_csv_row(*slot.row, config.timings) << '\n' << std::flush;
  }
  stop.store(true);
  for (auto& t : pool) t.join();

  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const SolverError& e) {
      outcome.aborted = true;
      outcome.abort_kind = e.kind();
      outcome.abort_message = e.what();
    }
  }

  if (!csv) {
    nlohmann::ordered_json doc;
    doc["schema"] = kExperimentSchema;
    doc["columns"] = experiment_columns();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : outcome.rows) {
      nlohmann::ordered_json j;
      j["family"] = r.family;
      j["n"] = r.n;
      j["u_or_match_value"] = r.value;
      j["lower_bound"] = r.lower;
      j["upper_bound"] = r.upper;
      j["mode"] = mode_name(r.mode);
      j["nodes"] = r.nodes;
      j["elapsed_ms"] = config.timings ? nlohmann::ordered_json(r.elapsed_ms) : nullptr;
      j["ratio"] = r.ratio;
      rows.push_back(std::move(j));
    }
    doc["rows"] = std::move(rows);
    doc["aborted"] = outcome.aborted;
    if (outcome.aborted) doc["error"] = outcome.abort_message;
    out << doc.dump(2) << '\n' << std::flush;
  }
  return outcome;
}

}  // namespace toucher
