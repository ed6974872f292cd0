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

// Independent reference computations used to check solver output. Nothing
// here calls the production q-value or outcome code.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lanerouter/lane_graph.h"
#include "lanerouter/mdp.h"
#include "lanerouter/router.h"

namespace lanerouter::testing {

/// 1 - exp(-alpha * length), evaluated with std::exp.
double RefSuccessProb(double alpha, double length);

/// Expected cost of `a` from `x` under `g`, or nullopt when a
/// positive-probability target is unreachable.
std::optional<double> RefQ(const LaneGraph& graph, const SolveParams& params,
                           const Solution& sol, CellIndex x, const Action& a);

/// Every action available at `x`, rebuilt from the topology, in tie order.
std::vector<Action> RefActions(const LaneGraph& graph, CellIndex x);

/// Cells from which the goal is reached with probability one under some
/// policy (least fixed point over actions whose targets are all inside).
std::vector<bool> RefReachable(const LaneGraph& graph, CellIndex goal);

struct BellmanReport {
  double max_residual = 0.0;
  std::string worst_cell;
  std::vector<std::string> problems;  // reachability or tie-order mismatches
};

/// |g(x) - min_a q(x, a)| over the full action set for every reachable
/// non-goal cell, plus checks that the policy attains the minimum and is
/// the first action to do so within `tie_tol` (relative, a few ulps).
BellmanReport CheckBellman(const LaneGraph& graph, const Solution& sol,
                           double tie_tol = 1e-14);

/// Transitions of the policy with nonzero probability, (from, to).
std::vector<std::pair<CellIndex, CellIndex>> PolicyTransitions(
    const LaneGraph& graph, const Solution& sol);

/// Positive-probability policy transitions where g does not strictly drop.
std::vector<std::string> NonDecreasingTransitions(const LaneGraph& graph,
                                                  const Solution& sol);

/// A directed cycle in the positive-probability policy transition graph, as
/// a list of cell ids, or empty when there is none.
std::vector<std::string> FindPolicyCycle(const LaneGraph& graph,
                                         const Solution& sol);

/// Simple path from `from` to `to` along successor edges only.
bool SuccessorPathExists(const LaneGraph& graph, CellIndex from, CellIndex to);

}  // namespace lanerouter::testing
