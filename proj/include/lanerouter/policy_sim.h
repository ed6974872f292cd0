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

// Monte Carlo execution of a routing policy under the stochastic lane change
// model. Used to check empirically that the solver's g is the expected cost.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lanerouter/lane_graph.h"
#include "lanerouter/mdp.h"
#include "lanerouter/router.h"

namespace lanerouter {

struct RolloutStep {
  CellIndex cell;
  Action action;
  bool succeeded = true;  // lane change outcome; forced ones always move
  CellIndex target;
  double cost = 0.0;
};

struct RolloutTrace {
  std::vector<RolloutStep> steps;
  double total_cost = 0.0;
  bool reached_goal = false;
  std::uint64_t steps_taken = 0;
};

struct SimSummary {
  std::uint64_t trials = 0;
  double mean_cost = 0.0;
  double std_dev = 0.0;
  double std_err = 0.0;
  std::uint64_t failures = 0;  // trials stopped by the step limit
};

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// splitmix64-seeded xoshiro256** generator. The stream for a given seed is
/// fixed by this implementation, independent of the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t Next();
  /// Uniform in [0, 1) with 53 random bits.
  double Uniform();

 private:
  std::uint64_t s_[4];
};

/// Seed of trial `i` derived from the run seed.
constexpr std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t i) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (i + 1));
}

/// 10 * |cells|.
std::uint64_t DefaultStepLimit(const LaneGraph& graph);

/// One execution of the policy from `start` until the goal or the step
/// limit. total_cost sums step costs from the last step backwards so a
/// deterministic stay chain reproduces the solver's value exactly.
RolloutTrace Rollout(const LaneGraph& graph, const Solution& solution,
                     CellIndex start, std::uint64_t seed,
                     std::optional<std::uint64_t> step_limit = {});

enum class TrialKernel { kSerial, kOpenMP };

/// `trials` independent rollouts with seeds TrialSeed(seed, i). Statistics
/// are accumulated in trial order, so both kernels give identical results.
SimSummary EstimateCost(const LaneGraph& graph, const Solution& solution,
                        CellIndex start, std::uint64_t trials,
                        std::uint64_t seed,
                        std::optional<std::uint64_t> step_limit = {},
                        TrialKernel kernel = TrialKernel::kOpenMP);

std::string SummaryToJson(const SimSummary& summary);

}  // namespace lanerouter
