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

// Single-pass label-setting solver for the lane routing MDP.
//
// Cells are finalized in order of increasing cost-to-go, starting from the
// goal. Each time a cell closes, every (cell, action) pair that can reach it
// with nonzero probability is re-evaluated. This is exact when the cost
// formulation is monotone, which holds whenever every cell satisfies
//
//     cost(x) / length(x) >= alpha * c_flc.
//
// If the formulation is not monotone a closed cell may later be improved;
// the solver detects this and reacts according to SolveMode.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lanerouter/lane_graph.h"
#include "lanerouter/mdp.h"

namespace lanerouter {

struct SolveStats {
  std::uint64_t pops = 0;
  std::uint64_t children_evaluated = 0;
  bool reopen_detected = false;
  std::vector<CellIndex> reopened_cells;
  // Filled by the value iteration backend only.
  std::uint64_t vi_iterations = 0;
  std::vector<double> vi_residuals;
};

struct Solution {
  CellIndex goal;
  SolveParams params;
  ValueFunction g;
  std::vector<std::optional<Action>> policy;
  SolveStats stats;

  Value value(CellIndex x) const { return g[x]; }
  const std::optional<Action>& action(CellIndex x) const {
    return policy[x.value];
  }
};

enum class SolveMode {
  kStrict,      // refuse graphs failing the precheck; abort on reopen
  kForce,       // skip the precheck; abort on reopen
  kFallbackVI,  // skip the precheck; re-solve with value iteration on reopen
};

class UnknownGoalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MonotonicityPrecheckFailed : public std::runtime_error {
 public:
  explicit MonotonicityPrecheckFailed(std::vector<std::string> violators);
  const std::vector<std::string>& violators() const { return violators_; }

 private:
  std::vector<std::string> violators_;
};

/// A closed cell would have been improved after it was finalized.
class NonMonotoneError : public std::runtime_error {
 public:
  explicit NonMonotoneError(std::string cell);
  const std::string& cell() const { return cell_; }

 private:
  std::string cell_;
};

struct MonotonicityCheck {
  bool ok = true;
  std::vector<CellIndex> violators;  // id order
};

/// Relative slack applied to the ratio test so c_flc = 1/alpha with
/// cost == length is accepted despite rounding in alpha * (1/alpha).
inline constexpr double kMonotonicitySlack = 1e-12;

MonotonicityCheck CheckMonotonicityCondition(const LaneGraph& graph,
                                             const SolveParams& params);

struct Child {
  CellIndex cell;
  Action action;
  Value q;
};

/// Every (cell, action) pair that reaches the just-closed cell `x` with
/// nonzero probability and whose other outcome, if any, is already closed.
/// Only the cheapest action per child cell is returned (ties go to the
/// earlier action in the fixed order). Output sorted by child cell.
std::vector<Child> FindChildren(const LaneGraph& graph,
                                const SolveParams& params, CellIndex x,
                                const ValueFunction& g,
                                std::span<const std::uint8_t> closed);

Solution Solve(const LaneGraph& graph, CellIndex goal,
               const SolveParams& params, SolveMode mode = SolveMode::kStrict);
Solution Solve(const LaneGraph& graph, std::string_view goal,
               const SolveParams& params, SolveMode mode = SolveMode::kStrict);

}  // namespace lanerouter
