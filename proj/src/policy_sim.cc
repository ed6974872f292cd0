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

#include "lanerouter/policy_sim.h"

#include <cmath>

#include "json_text.h"

namespace lanerouter {

namespace {

constexpr std::uint64_t Rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct TrialResult {
  double total_cost = 0.0;
  bool reached_goal = false;
};

void CheckStart(const LaneGraph& graph, const Solution& solution,
                CellIndex start) {
  if (start.value >= graph.size()) {
    throw SimulationError("start cell index out of range");
  }
  if (!solution.g[start].reachable()) {
    throw SimulationError("start cell '" + graph.id(start) +
                          "' cannot reach the goal");
  }
}

// Samples one trajectory. Step costs are written to `costs` (cleared first)
// and, when `trace` is set, full steps are recorded as well.
TrialResult RunTrial(const LaneGraph& graph, const Solution& solution,
                     CellIndex start, std::uint64_t seed,
                     std::uint64_t step_limit, std::vector<double>& costs,
                     std::vector<RolloutStep>* trace) {
  Rng rng(seed);
  const SolveParams& p = solution.params;
  costs.clear();
  CellIndex x = start;
  while (x != solution.goal && costs.size() < step_limit) {
    const std::optional<Action>& action = solution.policy[x.value];
    if (!action) {
      throw SimulationError("no policy action at visited cell '" +
                            graph.id(x) + "'");
    }
    const double c = graph.cost(x);
    RolloutStep step{x, *action, true, action->success, c};
    switch (action->kind) {
      case ActionKind::kStay:
        break;
      case ActionKind::kLaneChange: {
        const double f = SuccessProb(p.alpha, graph.length(x));
        if (rng.Uniform() < f) {
          step.cost = p.lane_change_cost + c;
        } else {
          step.succeeded = false;
          step.target = *action->failure;
        }
        break;
      }
      case ActionKind::kForced: {
        // Always moves; the surcharge applies when a regular attempt would
        // have failed.
        const double f = SuccessProb(p.alpha, graph.length(x));
        step.cost = p.lane_change_cost + c;
        if (!(rng.Uniform() < f)) step.cost += p.forced_lane_change_cost;
        break;
      }
    }
    costs.push_back(step.cost);
    if (trace) trace->push_back(step);
    x = step.target;
  }
  TrialResult result;
  result.reached_goal = x == solution.goal;
  for (auto it = costs.rbegin(); it != costs.rend(); ++it) {
    result.total_cost = *it + result.total_cost;
  }
  return result;
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& word : s_) word = SplitMix64(state);
}

std::uint64_t Rng::Next() {
  const std::uint64_t result = Rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = Rotl(s_[3], 45);
  return result;
}

double Rng::Uniform() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

std::uint64_t DefaultStepLimit(const LaneGraph& graph) {
  return 10 * static_cast<std::uint64_t>(graph.size());
}

RolloutTrace Rollout(const LaneGraph& graph, const Solution& solution,
                     CellIndex start, std::uint64_t seed,
                     std::optional<std::uint64_t> step_limit) {
  CheckStart(graph, solution, start);
  RolloutTrace trace;
  std::vector<double> costs;
  const TrialResult r =
      RunTrial(graph, solution, start, seed,
               step_limit.value_or(DefaultStepLimit(graph)), costs,
               &trace.steps);
  trace.total_cost = r.total_cost;
  trace.reached_goal = r.reached_goal;
  trace.steps_taken = trace.steps.size();
  return trace;
}

SimSummary EstimateCost(const LaneGraph& graph, const Solution& solution,
                        CellIndex start, std::uint64_t trials,
                        std::uint64_t seed,
                        std::optional<std::uint64_t> step_limit,
                        TrialKernel kernel) {
  if (trials < 1) throw SimulationError("trials must be >= 1");
  CheckStart(graph, solution, start);
  const std::uint64_t limit = step_limit.value_or(DefaultStepLimit(graph));

  std::vector<TrialResult> results(trials);
  if (kernel == TrialKernel::kSerial) {
    std::vector<double> costs;
    for (std::uint64_t i = 0; i < trials; ++i) {
      results[i] = RunTrial(graph, solution, start, TrialSeed(seed, i), limit,
                            costs, nullptr);
    }
  } else {
    const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel
    {
      std::vector<double> costs;
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t i = 0; i < count; ++i) {
        const auto t = static_cast<std::uint64_t>(i);
        results[t] = RunTrial(graph, solution, start, TrialSeed(seed, t),
                              limit, costs, nullptr);
      }
    }
  }

  // Welford, in trial order.
  SimSummary summary;
  summary.trials = trials;
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const double x = results[i].total_cost;
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
    if (!results[i].reached_goal) ++summary.failures;
  }
  summary.mean_cost = mean;
  summary.std_dev =
      trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1)) : 0.0;
  summary.std_err = summary.std_dev / std::sqrt(static_cast<double>(trials));
  return summary;
}

std::string SummaryToJson(const SimSummary& s) {
  using internal::FormatSig9;
  return "{\"trials\":" + std::to_string(s.trials) +
         ",\"mean\":" + FormatSig9(s.mean_cost) +
         ",\"std_dev\":" + FormatSig9(s.std_dev) +
         ",\"std_err\":" + FormatSig9(s.std_err) +
         ",\"failures\":" + std::to_string(s.failures) + "}\n";
}

}  // namespace lanerouter
