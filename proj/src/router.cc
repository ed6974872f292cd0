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

#include "lanerouter/router.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "lanerouter/value_iteration.h"

namespace lanerouter {

namespace {

std::string JoinIds(const std::vector<std::string>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < 10; ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  if (ids.size() > 10) out += ", ... (" + std::to_string(ids.size()) + " total)";
  return out;
}

void Emit(const LaneGraph& graph, const SolveParams& params,
          std::span<const Value> g, CellIndex cell, const Action& action,
          std::vector<Child>& out) {
  out.push_back(
      {cell, action, ExpectedCost(Outcomes(graph, params, cell, action), g)});
}

// Raw candidate list for a just-closed cell `x` (duplicates included). The
// four families, with x_p a predecessor of x and x_n a neighbor of x_p:
//   stay from x_p into x
//   forced lane change from x_n into x
//   lane change from x_p: success x_s in succ(x_n), failure x
//   lane change from x_n: success x, failure x_s in succ(x_n)
// A lane change is only evaluated once both of its outcomes are closed; the
// second of the two to close emits it.
void CollectCandidates(const LaneGraph& graph, const SolveParams& params,
                       CellIndex x, std::span<const Value> g,
                       std::span<const std::uint8_t> closed,
                       std::vector<Child>& out) {
  for (CellIndex xp : graph.predecessors(x)) {
    Emit(graph, params, g, xp, Action::Stay(x), out);
    for (CellIndex xn : graph.neighbors(xp)) {
      Emit(graph, params, g, xn, Action::Forced(x), out);
      for (CellIndex xs : graph.successors(xn)) {
        if (!closed[xs.value] && xs != x) continue;
        Emit(graph, params, g, xp, Action::LaneChange(xs, x), out);
        Emit(graph, params, g, xn, Action::LaneChange(x, xs), out);
      }
    }
  }
}

// Keeps the cheapest action per child cell, ties to the earlier action.
void KeepBestPerCell(std::vector<Child>& children) {
  std::sort(children.begin(), children.end(),
            [](const Child& a, const Child& b) {
              if (a.cell != b.cell) return a.cell < b.cell;
              if (a.q < b.q) return true;
              if (b.q < a.q) return false;
              return a.action < b.action;
            });
  auto last = std::unique(
      children.begin(), children.end(),
      [](const Child& a, const Child& b) { return a.cell == b.cell; });
  children.erase(last, children.end());
}

std::vector<std::string> Ids(const LaneGraph& graph,
                             const std::vector<CellIndex>& cells) {
  std::vector<std::string> ids;
  ids.reserve(cells.size());
  for (CellIndex c : cells) ids.push_back(graph.id(c));
  return ids;
}

}  // namespace

MonotonicityPrecheckFailed::MonotonicityPrecheckFailed(
    std::vector<std::string> violators)
    : std::runtime_error(
          "monotonicity precheck failed: cost/length < alpha * c_flc at " +
          JoinIds(violators)),
      violators_(std::move(violators)) {}

NonMonotoneError::NonMonotoneError(std::string cell)
    : std::runtime_error("non-monotone cost formulation: closed cell '" +
                         cell + "' was improved after it was finalized"),
      cell_(std::move(cell)) {}

MonotonicityCheck CheckMonotonicityCondition(const LaneGraph& graph,
                                             const SolveParams& params) {
  MonotonicityCheck check;
  const double bound = params.alpha.per_meter() *
                       params.forced_lane_change_cost *
                       (1.0 - kMonotonicitySlack);
  for (std::uint32_t i = 0; i < graph.size(); ++i) {
    const CellIndex x{i};
    if (graph.cost(x) / graph.length(x) < bound) {
      check.ok = false;
      check.violators.push_back(x);
    }
  }
  return check;
}

std::vector<Child> FindChildren(const LaneGraph& graph,
                                const SolveParams& params, CellIndex x,
                                const ValueFunction& g,
                                std::span<const std::uint8_t> closed) {
  std::vector<Child> children;
  CollectCandidates(graph, params, x, g.values(), closed, children);
  KeepBestPerCell(children);
  return children;
}

Solution Solve(const LaneGraph& graph, std::string_view goal,
               const SolveParams& params, SolveMode mode) {
  auto x = graph.Find(goal);
  if (!x) throw UnknownGoalError("unknown goal cell '" + std::string(goal) + "'");
  return Solve(graph, *x, params, mode);
}

Solution Solve(const LaneGraph& graph, CellIndex goal,
               const SolveParams& params, SolveMode mode) {
  if (goal.value >= graph.size()) {
    throw UnknownGoalError("goal index out of range");
  }
  if (mode == SolveMode::kStrict) {
    MonotonicityCheck check = CheckMonotonicityCondition(graph, params);
    if (!check.ok) {
      throw MonotonicityPrecheckFailed(Ids(graph, check.violators));
    }
  }

  const std::size_t n = graph.size();
  Solution sol{goal, params, ValueFunction(n),
               std::vector<std::optional<Action>>(n), {}};
  std::vector<std::uint8_t> closed(n, 0);

  using Entry = std::pair<double, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  sol.g[goal] = Value(0.0);
  open.push({0.0, goal.value});

  std::vector<Child> children;
  while (!open.empty()) {
    const auto [key, xi] = open.top();
    open.pop();
    const CellIndex x{xi};
    // Lazy deletion: skip entries superseded by a later decrease.
    if (closed[xi] || sol.g[x].cost() != key) continue;
    closed[xi] = 1;
    ++sol.stats.pops;

    children.clear();
    CollectCandidates(graph, params, x, sol.g.values(), closed, children);
    sol.stats.children_evaluated += children.size();
    KeepBestPerCell(children);

    for (const Child& child : children) {
      if (child.cell == goal) continue;
      Value& current = sol.g[child.cell];
      std::optional<Action>& pi = sol.policy[child.cell.value];
      if (closed[child.cell.value]) {
        if (!(child.q < current)) continue;
        if (mode != SolveMode::kFallbackVI) {
          throw NonMonotoneError(graph.id(child.cell));
        }
        SolveStats partial = std::move(sol.stats);
        sol = ValueIterate(graph, goal, params);
        sol.stats.pops = partial.pops;
        sol.stats.children_evaluated = partial.children_evaluated;
        sol.stats.reopen_detected = true;
        sol.stats.reopened_cells = {child.cell};
        return sol;
      }
      if (child.q < current) {
        current = child.q;
        pi = child.action;
        open.push({current.cost(), child.cell.value});
      } else if (child.q == current && child.action < *pi) {
        pi = child.action;
      }
    }
  }
  return sol;
}

}  // namespace lanerouter
