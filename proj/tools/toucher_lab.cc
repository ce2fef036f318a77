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

// toucher_lab: command-line front end for the Toucher-Isolator library.
//
// Exit codes: 0 success, 1 bad input (flags, files, parameters), 2 solver
// limit reached (edge ceiling, node budget, table memory), 3 a strategy
// played an illegal move, 4 a verification check failed.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toucher/bounds.h"
#include "toucher/experiment.h"
#include "toucher/generators.h"
#include "toucher/match.h"
#include "toucher/solver.h"
#include "toucher/strategies.h"
#include "toucher/verify.h"

namespace {

using namespace toucher;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitSolverLimit = 2;
constexpr int kExitStrategy = 3;
constexpr int kExitVerify = 4;

// Where a command's graph comes from: a generated family or a file.
struct GraphSource {
  std::string family;
  int n = 0;
  int count = 0;
  std::vector<int> offsets;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* fam = cmd->add_option("--family", family, "Graph family")
                    ->check(CLI::IsMember(family_names()));
    cmd->add_option("--n", n, "Size parameter (cycle, path, star, circulant)");
    cmd->add_option("--c", count, "Component count (or x for p3_components_plus_p2)");
    cmd->add_option("--offsets", offsets, "Circulant offsets, comma separated")->delimiter(',');
    auto* f = cmd->add_option("--file", file, "Graph file (header 'n m', then 'u v' lines)");
    fam->excludes(f);
  }

  Graph load() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::runtime_error("cannot open graph file '" + file + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      return parse_graph(buffer.str());
    }
    if (family.empty()) throw std::invalid_argument("give --family or --file");
    FamilySpec spec{family, n, count, offsets};
    return generate(spec);
  }
};

TurnSchedule schedule_from(const std::string& first) {
  return TurnSchedule::alternating_from(parse_player(first));
}

void add_solver_options(CLI::App* cmd, SolverOptions& options) {
  cmd->add_option("--ceiling", options.edge_ceiling, "Edge ceiling for exact search")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", options.node_budget, "Node budget for best-response search")
      ->check(CLI::PositiveNumber);
}

// Reads edge ids from a terminal, listing the legal ones; never returns an
// illegal edge.
class HumanStrategy : public StatelessStrategy {
 public:
  HumanStrategy(Player side, std::istream& in, std::ostream& out)
      : side_(side), in_(&in), out_(&out) {}

  std::string name() const override { return "human"; }
  Player side() const override { return side_; }

  EdgeId choose(const GameState& s) const override {
    for (;;) {
      *out_ << "legal moves:";
      for (EdgeId e = 0; e < s.graph().num_edges(); ++e) {
        if (s.is_free(e)) {
          const Edge& ed = s.graph().edge(e);
          *out_ << ' ' << e << "={" << ed.u << ',' << ed.v << '}';
        }
      }
      *out_ << "\n" << player_name(side_) << " edge id> " << std::flush;
      std::string line;
      if (!std::getline(*in_, line)) throw std::runtime_error("input closed before the game ended");
      std::istringstream parse(line);
      long long id = -1;
      std::string rest;
      if (parse >> id && !(parse >> rest) && id >= 0 && id < s.graph().num_edges() &&
          s.is_free(static_cast<EdgeId>(id))) {
        return static_cast<EdgeId>(id);
      }
      *out_ << "not a free edge id: '" << line << "'\n";
    }
  }

  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<HumanStrategy>(*this);
  }

 private:
  Player side_;
  std::istream* in_;
  std::ostream* out_;
};

int report_solver_error(const SolverError& e) {
  std::cerr << "error: " << e.what() << '\n';
  return e.kind() == SolverError::Kind::kIllegalStrategyMove ? kExitStrategy : kExitSolverLimit;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  GraphSource source;
  SolverOptions options;
  std::string first = "toucher";
  bool no_table = false;
  bool no_alpha_beta = false;
};

int cmd_solve(const SolveArgs& args) {
  const Graph g = args.source.load();
  SolverOptions options = args.options;
  options.transposition_table = !args.no_table;
  options.alpha_beta = !args.no_alpha_beta;
  const SolveResult r = solve_exact(g, schedule_from(args.first), options);
  std::cout << solve_result_json(r) << '\n';
  return kExitOk;
}

struct PlayArgs {
  GraphSource source;
  std::string toucher = "max_danger";
  std::string isolator = "max_danger";
  std::string human;
  std::string replay;
  std::string first = "toucher";
};

int cmd_play(const PlayArgs& args) {
  const Graph g = args.source.load();
  std::unique_ptr<Strategy> toucher;
  std::unique_ptr<Strategy> isolator;
  if (!args.human.empty()) {
    const Player side = parse_player(args.human);
    auto human = std::make_unique<HumanStrategy>(side, std::cin, std::cout);
    (side == Player::kToucher ? toucher : isolator) = std::move(human);
  }
  if (!toucher) toucher = make_strategy(args.toucher, Player::kToucher, g);
  if (!isolator) isolator = make_strategy(args.isolator, Player::kIsolator, g);
  const MatchResult m = play_match(g, schedule_from(args.first), *toucher, *isolator);
  std::cout << "# toucher " << toucher->name() << ", isolator " << isolator->name() << '\n'
            << format_move_log(m.log) << "untouched " << m.untouched << '\n';
  if (!args.replay.empty()) {
    std::ofstream out(args.replay);
    if (!out) throw std::runtime_error("cannot write move log '" + args.replay + "'");
    out << format_move_log(m.log);
  }
  return kExitOk;
}

struct BestResponseArgs {
  GraphSource source;
  SolverOptions options;
  std::string fixed = "isolator";
  std::string strategy = "max_danger";
  std::string first = "toucher";
};

int cmd_best_response(const BestResponseArgs& args) {
  const Graph g = args.source.load();
  const Player side = parse_player(args.fixed);
  const auto strategy = make_strategy(args.strategy, side, g);
  const SolveResult r =
      best_response_value(g, schedule_from(args.first), side, *strategy, args.options);
  std::cout << solve_result_json(r) << '\n';
  return kExitOk;
}

struct BoundsArgs {
  GraphSource source;
  std::string declare;
};

int cmd_bounds(const BoundsArgs& args) {
  const Graph g = args.source.load();
  const auto report = closed_form_bounds(
      g, args.declare.empty() ? std::nullopt : std::optional<std::string>(args.declare));
  std::cout << bounds_report_json(report) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> suites;
  VerifyOptions options;
  std::string json;
};

int cmd_verify(VerifyArgs args) {
  if (args.suites.empty()) args.suites = suite_names();
  args.options.progress = &std::cout;
  std::vector<CheckResult> all;
  for (const auto& suite : args.suites) {
    auto results = run_suite(suite, args.options);
    all.insert(all.end(), results.begin(), results.end());
  }
  int failed = 0;
  for (const auto& c : all) failed += c.passed ? 0 : 1;
  std::cout << (failed == 0 ? "ALL PASS" : "FAILED") << ": " << all.size() - failed << " of "
            << all.size() << " checks passed\n";
  for (const auto& c : all) {
    if (!c.passed) std::cout << "  failed: " << c.suite << "/" << c.name << ": " << c.details << '\n';
  }
  if (!args.json.empty()) {
    std::ofstream out(args.json);
    if (!out) throw std::runtime_error("cannot write report '" + args.json + "'");
    out << verify_report_json(all, args.options) << '\n';
  }
  return failed == 0 ? kExitOk : kExitVerify;
}

// "3..12", "3..15:2" or "3,5,8".
std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    int step = 1;
    std::string hi_text = text.substr(dots + 2);
    if (const auto colon = hi_text.find(':'); colon != std::string::npos) {
      step = std::stoi(hi_text.substr(colon + 1));
      hi_text = hi_text.substr(0, colon);
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(hi_text);
    if (step <= 0 || lo > hi) throw std::invalid_argument("bad size range '" + text + "'");
    for (int v = lo; v <= hi; v += step) sizes.push_back(v);
    return sizes;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) sizes.push_back(std::stoi(item));
  if (sizes.empty()) throw std::invalid_argument("empty size list");
  return sizes;
}

struct ExperimentArgs {
  ExperimentConfig config;
  std::string family;
  std::vector<int> offsets;
  std::string sizes;
  std::string mode = "exact";
  std::string format = "csv";
  std::string first = "toucher";
  std::string output;
  bool no_timings = false;
};

int cmd_experiment(ExperimentArgs args) {
  ExperimentConfig& config = args.config;
  if (!args.family.empty()) {
    config.family = FamilySpec{args.family, 0, 0, args.offsets};
    config.sizes = parse_sizes(args.sizes);
  }
  config.mode = args.mode == "exact" ? ExperimentMode::kExact : ExperimentMode::kMatch;
  config.format = args.format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  config.schedule = schedule_from(args.first);
  config.timings = !args.no_timings;
  validate(config);

  std::ofstream file;
  if (!args.output.empty()) {
    file.open(args.output);
    if (!file) throw std::runtime_error("cannot write '" + args.output + "'");
  }
  std::ostream& out = args.output.empty() ? std::cout : file;
  const ExperimentOutcome outcome = run_experiment(config, out);
  if (outcome.aborted) {
    std::cerr << "error: aborted after " << outcome.rows.size()
              << " rows: " << outcome.abort_message << '\n';
    return kExitSolverLimit;
  }
  return kExitOk;
}

struct GenArgs {
  GraphSource source;
  std::string output;
};

int cmd_gen(const GenArgs& args) {
  if (args.source.family.empty()) throw std::invalid_argument("gen needs --family");
  const Graph g = args.source.load();
  if (args.output.empty()) {
    std::cout << format_graph(g);
    return kExitOk;
  }
  std::ofstream out(args.output);
  if (!out) throw std::runtime_error("cannot write '" + args.output + "'");
  out << format_graph(g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toucher-Isolator game laboratory: exact solver, strategies, bounds, sweeps"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact game value as JSON");
  solve.source.attach(solve_cmd);
  add_solver_options(solve_cmd, solve.options);
  solve_cmd->add_option("--first", solve.first, "Player to move first");
  solve_cmd->add_flag("--no-table", solve.no_table, "Disable the transposition table");
  solve_cmd->add_flag("--no-alpha-beta", solve.no_alpha_beta, "Disable alpha-beta cutoffs");

  PlayArgs play;
  auto* play_cmd = app.add_subcommand("play", "Play one match and print the move log");
  play.source.attach(play_cmd);
  play_cmd->add_option("--toucher", play.toucher, "Toucher strategy");
  play_cmd->add_option("--isolator", play.isolator, "Isolator strategy");
  play_cmd->add_option("--human", play.human, "Side entered from the terminal")
      ->check(CLI::IsMember({"toucher", "isolator"}));
  play_cmd->add_option("--replay", play.replay, "Write the move log to this file");
  play_cmd->add_option("--first", play.first, "Player to move first");

  BestResponseArgs br;
  auto* br_cmd = app.add_subcommand("best-response", "Value of a fixed strategy vs optimal play");
  br.source.attach(br_cmd);
  add_solver_options(br_cmd, br.options);
  br_cmd->add_option("--fixed", br.fixed, "Side of the fixed strategy")
      ->check(CLI::IsMember({"toucher", "isolator"}));
  br_cmd->add_option("--strategy", br.strategy, "Fixed strategy")->required();
  br_cmd->add_option("--first", br.first, "Player to move first");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds as JSON");
  bounds.source.attach(bounds_cmd);
  bounds_cmd->add_option("--declare", bounds.declare, "Declared structural family");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", verify.suites, "Suite name (repeatable; default all)")
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--seed", verify.options.seed, "Playout and relabeling seed");
  verify_cmd->add_option("--corpus-seed", verify.options.corpus_seed, "Corpus seed");
  verify_cmd->add_option("--trials", verify.options.trials, "Random playouts")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--json", verify.json, "Also write a JSON report to this file");
  add_solver_options(verify_cmd, verify.options.solver);

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Sweep a family or graph files to CSV/JSON");
  auto* exp_family = exp_cmd->add_option("--family", exp.family, "Graph family")
                         ->check(CLI::IsMember(family_names()));
  exp_cmd->add_option("--sizes", exp.sizes, "Sizes: '3..12', '3..15:2' or '3,5,8'");
  exp_cmd->add_option("--offsets", exp.offsets, "Circulant offsets")->delimiter(',');
  auto* exp_files = exp_cmd->add_option("--files", exp.config.files, "Graph files");
  exp_family->excludes(exp_files);
  exp_cmd->add_option("--mode", exp.mode, "exact or match")
      ->check(CLI::IsMember({"exact", "match"}));
  exp_cmd->add_option("--toucher", exp.config.toucher, "Toucher strategy (match mode)");
  exp_cmd->add_option("--isolator", exp.config.isolator, "Isolator strategy (match mode)");
  exp_cmd->add_option("--format", exp.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  exp_cmd->add_option("-o,--output", exp.output, "Output file (default stdout)");
  exp_cmd->add_option("--seed", exp.config.seed, "Seed for 'random' strategies");
  exp_cmd->add_option("--threads", exp.config.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  exp_cmd->add_option("--first", exp.first, "Player to move first");
  exp_cmd->add_flag("--no-timings", exp.no_timings, "Leave elapsed_ms empty");
  add_solver_options(exp_cmd, exp.config.solver);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph file");
  gen.source.attach(gen_cmd);
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*play_cmd) return cmd_play(play);
    if (*br_cmd) return cmd_best_response(br);
    if (*bounds_cmd) return cmd_bounds(bounds);
    if (*verify_cmd) return cmd_verify(verify);
    if (*exp_cmd) return cmd_experiment(exp);
    if (*gen_cmd) return cmd_gen(gen);
  } catch (const SolverError& e) {
    return report_solver_error(e);
  } catch (const StrategyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitStrategy;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
