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

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toucher/experiment.h"
#include "toucher/generators.h"

using namespace toucher;

namespace {

ExperimentConfig sweep(const std::string& family, std::vector<int> sizes) {
  ExperimentConfig config;
  config.family = FamilySpec{};
  config.family->family = family;
  config.sizes = std::move(sizes);
  config.timings = false;
  return config;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("CSV schema") {
  std::ostringstream out;
  const auto outcome = run_experiment(sweep("cycle", {3, 4, 5}), out);
  CHECK_FALSE(outcome.aborted);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "# toucher-lab v1");
  CHECK(lines[1] == "family,n,u_or_match_value,lower_bound,upper_bound,mode,nodes,elapsed_ms,ratio");
  CHECK(lines[3].rfind("cycle,4,1,1,1,exact,", 0) == 0);
  CHECK(lines[3].find(",,0.250000") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  auto config = sweep("path", {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  std::ostringstream a, b, c;
  run_experiment(config, a);
  run_experiment(config, b);
  config.threads = 4;
  run_experiment(config, c);
  CHECK(a.str() == b.str());
  CHECK(a.str() == c.str());
}

TEST_CASE("ceiling abort keeps the rows before it") {
  auto config = sweep("cycle", {5, 6, 30, 7});
  config.threads = 2;
  std::ostringstream out;
  const auto outcome = run_experiment(config, out);
  CHECK(outcome.aborted);
  REQUIRE(outcome.abort_kind.has_value());
  CHECK(*outcome.abort_kind == SolverError::Kind::kCeilingExceeded);
  CHECK(outcome.rows.size() == 2);
  CHECK(lines_of(out.str()).size() == 4);
}

TEST_CASE("match mode and JSON output") {
  auto config = sweep("cycle", {17, 19});
  config.mode = ExperimentMode::kMatch;
  config.toucher = "random";
  config.isolator = "cycle_segment";
  config.format = OutputFormat::kJson;
  std::ostringstream out;
  const auto outcome = run_experiment(config, out);
  REQUIRE(outcome.rows.size() == 2);
  CHECK(outcome.rows[0].value >= 3);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["schema"] == kExperimentSchema);
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0]["mode"] == "match");
  CHECK(j["rows"][0]["elapsed_ms"].is_null());
  CHECK(j["aborted"] == false);
}

TEST_CASE("graph files as input") {
  const std::string path = "experiment_test_triangle.txt";
  {
    std::ofstream f(path);
    f << format_graph(cycle_graph(3));
  }
  ExperimentConfig config;
  config.files = {path};
  std::ostringstream out;
  const auto outcome = run_experiment(config, out);
  REQUIRE(outcome.rows.size() == 1);
  CHECK(outcome.rows[0].family == "experiment_test_triangle");
  CHECK(outcome.rows[0].value == 0);
  std::remove(path.c_str());

  config.files = {"does_not_exist.txt"};
  CHECK_THROWS_AS(run_experiment(config, out), std::runtime_error);
}

TEST_CASE("config validation") {
  ExperimentConfig none;
  CHECK_THROWS_AS(validate(none), std::invalid_argument);
  auto both = sweep("cycle", {3});
  both.files = {"x.txt"};
  CHECK_THROWS_AS(validate(both), std::invalid_argument);
  auto empty = sweep("cycle", {});
  CHECK_THROWS_AS(validate(empty), std::invalid_argument);
  auto zero_threads = sweep("cycle", {3});
  zero_threads.threads = 0;
  CHECK_THROWS_AS(validate(zero_threads), std::invalid_argument);
  auto bad_ceiling = sweep("cycle", {3});
  bad_ceiling.solver.edge_ceiling = 0;
  CHECK_THROWS_AS(validate(bad_ceiling), std::invalid_argument);
}
