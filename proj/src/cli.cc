// Copyright 2026 The lanerouter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lanerouter/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "lanerouter/lane_graph.h"
#include "lanerouter/policy_io.h"
#include "lanerouter/policy_sim.h"
#include "lanerouter/render.h"
#include "lanerouter/router.h"
#include "lanerouter/scenarios.h"
#include "lanerouter/value_iteration.h"

namespace lanerouter {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reported with exit code 2; the report has already been printed.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return buf.str();
}

// "-" writes to `out`.
void WriteFile(const std::string& path, const std::string& text,
               std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("error while writing '" + path + "'");
}

LaneGraph LoadGraph(const std::string& path, std::ostream& err) {
  const std::string text = ReadFile(path);
  BuildResult result = [&] {
    try {
      return ParseGraph(text);
    } catch (const ParseError& e) {
      throw InvalidInput(path + ": " + e.what());
    }
  }();
  if (auto* report = std::get_if<ValidationReport>(&result)) {
    err << path << ": graph validation failed\n" << report->ToString();
    throw InvalidInput(path + ": " +
                       std::to_string(report->violations.size()) +
                       " violation(s)");
  }
  return std::get<LaneGraph>(std::move(result));
}

Solution LoadPolicy(const LaneGraph& graph, const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return ParsePolicy(graph, text);
  } catch (const ParseError& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

struct SolveArgs {
  std::string graph;
  std::string goal;
  double alpha = 0.0;
  double clc = 0.0;
  double cflc = std::numeric_limits<double>::quiet_NaN();
  std::string mode = "strict";
  std::string out;
  double tolerance = VIConfig{}.tolerance;
  std::uint64_t max_iterations = VIConfig{}.max_iterations;

  SolveParams Params() const {
    return SolveParams::Make(alpha, clc,
                             std::isnan(cflc) ? std::optional<double>()
                                              : std::optional<double>(cflc));
  }
};

void AddSolveOptions(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("graph", a.graph, "Graph JSON file")->required();
  cmd->add_option("--goal", a.goal, "Goal cell id")->required();
  cmd->add_option("--alpha", a.alpha, "Lane change rate per meter")
      ->required();
  cmd->add_option("--clc", a.clc, "Lane change cost")->required();
  cmd->add_option("--cflc", a.cflc,
                  "Forced lane change cost (default 1/alpha)");
  cmd->add_option("--out", a.out, "Policy JSON output ('-' for stdout)")
      ->required();
}

std::size_t CountReachable(const Solution& sol) {
  std::size_t n = 0;
  for (const Value& v : sol.g.values()) n += v.reachable() ? 1 : 0;
  return n;
}

int CmdValidate(const std::string& path, std::ostream& out,
                std::ostream& err) {
  const LaneGraph graph = LoadGraph(path, err);
  out << path << ": ok, " << graph.size() << " cells\n";
  return kExitOk;
}

int CmdSolve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const LaneGraph graph = LoadGraph(a.graph, err);
  const SolveParams params = a.Params();
  const SolveMode mode = a.mode == "force"         ? SolveMode::kForce
                         : a.mode == "fallback-vi" ? SolveMode::kFallbackVI
                                                   : SolveMode::kStrict;
  const Solution sol = Solve(graph, a.goal, params, mode);
  WriteFile(a.out, SerializePolicy(graph, sol), out);
  if (sol.stats.reopen_detected) {
    err << "warning: non-monotone costs, closed cell '"
        << graph.id(sol.stats.reopened_cells.front())
        << "' improved; re-solved by value iteration in "
        << sol.stats.vi_iterations << " iterations\n";
  }
  if (a.out != "-") {
    out << "solved " << graph.size() << " cells (" << CountReachable(sol)
        << " reachable), pops=" << sol.stats.pops << "\n";
  }
  return kExitOk;
}

int CmdVi(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const LaneGraph graph = LoadGraph(a.graph, err);
  VIConfig cfg;
  cfg.tolerance = a.tolerance;
  cfg.max_iterations = a.max_iterations;
  const Solution sol = ValueIterate(graph, a.goal, a.Params(), cfg);
  WriteFile(a.out, SerializePolicy(graph, sol), out);
  if (a.out != "-") {
    out << "value iteration converged after " << sol.stats.vi_iterations
        << " iterations, " << CountReachable(sol) << " reachable cells\n";
  }
  return kExitOk;
}

struct SimArgs {
  std::string graph;
  std::string policy;
  std::string start;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::uint64_t step_limit = 0;
  bool serial = false;
};

int CmdSimulate(const SimArgs& a, std::ostream& out, std::ostream& err) {
  const LaneGraph graph = LoadGraph(a.graph, err);
  const Solution sol = LoadPolicy(graph, a.policy);
  auto start = graph.Find(a.start);
  if (!start) throw std::invalid_argument("unknown start cell '" + a.start + "'");
  const SimSummary summary = EstimateCost(
      graph, sol, *start, a.trials, a.seed,
      a.step_limit ? std::optional<std::uint64_t>(a.step_limit) : std::nullopt,
      a.serial ? TrialKernel::kSerial : TrialKernel::kOpenMP);
  out << SummaryToJson(summary);
  return kExitOk;
}

struct RenderArgs {
  std::string graph;
  std::string policy;
  std::string format;
  std::string out;
};

int CmdRender(const RenderArgs& a, std::ostream& out, std::ostream& err) {
  const RenderFormat format = ParseRenderFormat(a.format);
  const LaneGraph graph = LoadGraph(a.graph, err);
  const Solution sol = LoadPolicy(graph, a.policy);
  WriteFile(a.out, Render(graph, sol, format), out);
  return kExitOk;
}

int WriteGraph(const LaneGraph& graph, const std::string& goal,
               const std::string& path, std::ostream& out) {
  WriteFile(path, SerializeGraph(graph), out);
  if (path != "-") {
    out << "wrote " << graph.size() << " cells to " << path
        << ", goal " << goal << "\n";
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lane-level routing under stochastic lane changes",
               "lanerouter"};
  app.require_subcommand(1);

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "Check a graph file");
  validate->add_option("graph", validate_path, "Graph JSON file")->required();

  CLI::App* gen = app.add_subcommand("gen", "Generate a scenario graph");
  gen->require_subcommand(1);
  std::string gen_out;
  MergeScenarioParams merge;
  CLI::App* gen_merge = gen->add_subcommand("merge", "Highway with on-ramp");
  gen_merge->add_option("--lanes", merge.n_lanes, "Number of lanes")
      ->capture_default_str();
  gen_merge->add_option("--cell-length", merge.cell_length, "Meters")
      ->capture_default_str();
  gen_merge->add_option("--road-length", merge.road_length, "Meters")
      ->capture_default_str();
  gen_merge->add_option("--merge-position", merge.merge_position, "Meters")
      ->capture_default_str();
  gen_merge->add_option("--ramp-length", merge.ramp_length, "Meters")
      ->capture_default_str();
  gen_merge->add_option("--c-left", merge.c_left, "Per-lane cost factor")
      ->capture_default_str();
  gen_merge->add_option("--c-merge", merge.c_merge, "Merge penalty")
      ->capture_default_str();
  gen_merge->add_option("--out", gen_out, "Output file ('-' for stdout)")
      ->required();

  TwoRouteScenarioParams two;
  CLI::App* gen_two = gen->add_subcommand("tworoute", "Two-route network");
  gen_two->add_option("--cell-length", two.cell_length, "Meters")
      ->capture_default_str();
  gen_two->add_option("--start-cells", two.start_cells)->capture_default_str();
  gen_two->add_option("--interior-cells", two.interior_cells)
      ->capture_default_str();
  gen_two->add_option("--perimeter-cells", two.perimeter_cells)
      ->capture_default_str();
  gen_two->add_option("--loop-cells", two.loop_cells)->capture_default_str();
  gen_two->add_option("--north-cells", two.north_cells)->capture_default_str();
  gen_two->add_option("--out", gen_out, "Output file ('-' for stdout)")
      ->required();

  double straight_length = 2000.0;
  double straight_cell = 0.5;
  CLI::App* gen_straight =
      gen->add_subcommand("straight", "Two-lane straight road");
  gen_straight->add_option("--length", straight_length, "Meters")
      ->capture_default_str();
  gen_straight->add_option("--cell-length", straight_cell, "Meters")
      ->capture_default_str();
  gen_straight->add_option("--out", gen_out, "Output file ('-' for stdout)")
      ->required();

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Label-setting solve");
  AddSolveOptions(solve, solve_args);
  solve->add_option("--mode", solve_args.mode, "Reaction to non-monotone costs")
      ->check(CLI::IsMember({"strict", "force", "fallback-vi"}))
      ->capture_default_str();

  SolveArgs vi_args;
  CLI::App* vi = app.add_subcommand("vi", "Value iteration solve");
  AddSolveOptions(vi, vi_args);
  vi->add_option("--tolerance", vi_args.tolerance)->capture_default_str();
  vi->add_option("--max-iterations", vi_args.max_iterations)
      ->capture_default_str();

  SimArgs sim_args;
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo rollouts");
  simulate->add_option("graph", sim_args.graph, "Graph JSON file")->required();
  simulate->add_option("policy", sim_args.policy, "Policy JSON file")
      ->required();
  simulate->add_option("--start", sim_args.start, "Start cell id")->required();
  simulate->add_option("--trials", sim_args.trials)->capture_default_str();
  simulate->add_option("--seed", sim_args.seed)->capture_default_str();
  simulate->add_option("--step-limit", sim_args.step_limit,
                       "Default 10 * number of cells");
  simulate->add_flag("--serial", sim_args.serial, "Run trials sequentially");

  RenderArgs render_args;
  CLI::App* render = app.add_subcommand("render", "Draw a policy");
  render->add_option("graph", render_args.graph, "Graph JSON file")
      ->required();
  render->add_option("policy", render_args.policy, "Policy JSON file")
      ->required();
  render->add_option("--format", render_args.format, "svg or ascii")
      ->required();
  render->add_option("--out", render_args.out, "Output file ('-' for stdout)")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return CmdValidate(validate_path, out, err);
    if (*gen_merge) {
      return WriteGraph(GenHighwayMerge(merge), MergeGoal(merge), gen_out, out);
    }
    if (*gen_two) return WriteGraph(GenTwoRoute(two), kTwoRouteGoal, gen_out, out);
    if (*gen_straight) {
      return WriteGraph(GenTwoLaneStraight(straight_length, straight_cell),
                        StraightGoal(straight_length, straight_cell), gen_out,
                        out);
    }
    if (*solve) return CmdSolve(solve_args, out, err);
    if (*vi) return CmdVi(vi_args, out, err);
    if (*simulate) return CmdSimulate(sim_args, out, err);
    if (*render) return CmdRender(render_args, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const GraphValidationError& e) {
    err << "error: generated graph is invalid\n" << e.report().ToString();
    return kExitValidation;
  } catch (const MonotonicityPrecheckFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecheck;
  } catch (const NonMonotoneError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNonMonotone;
  } catch (const NoConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNonMonotone;
  } catch (const std::exception& e) {
    // Unknown ids, out-of-range parameters, unsupported formats.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lanerouter
