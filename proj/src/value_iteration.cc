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

#include "lanerouter/value_iteration.h"

#include <algorithm>
#include <cmath>
#include <deque>

namespace lanerouter {

namespace {

// Flattened action table for every non-goal cell that can reach the goal.
struct ActionTable {
  std::vector<CellIndex> cells;             // cells to update each sweep
  std::vector<std::uint32_t> offsets;       // per entry of `cells`
  std::vector<Action> actions;
  std::vector<OutcomeSet> outcomes;
};

// Marks every cell that has some action sequence reaching the goal with
// probability one: a cell joins once one of its actions has all of its
// positive-probability outcomes inside the set. Actions that still touch an
// outside cell afterwards evaluate to Unreachable and are dropped.
ActionTable BuildReachableTable(const LaneGraph& graph, CellIndex goal,
                                const SolveParams& params,
                                std::vector<std::uint8_t>& in_set) {
  const std::size_t n = graph.size();
  std::vector<std::uint32_t> owner;
  std::vector<Action> all_actions;
  std::vector<OutcomeSet> all_outcomes;
  std::vector<std::uint32_t> pending;
  std::vector<std::vector<std::uint32_t>> by_target(n);

  for (std::uint32_t i = 0; i < n; ++i) {
    const CellIndex x{i};
    if (x == goal) continue;
    for (const Action& a : EnumerateActions(graph, x)) {
      const auto id = static_cast<std::uint32_t>(all_actions.size());
      OutcomeSet out = Outcomes(graph, params, x, a);
      std::uint32_t targets = 0;
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k].probability == 0.0) continue;
        if (k == 1 && out[0].probability != 0.0 &&
            out[0].target == out[1].target) {
          continue;
        }
        by_target[out[k].target.value].push_back(id);
        ++targets;
      }
      owner.push_back(i);
      all_actions.push_back(a);
      all_outcomes.push_back(out);
      pending.push_back(targets);
    }
  }

  in_set.assign(n, 0);
  in_set[goal.value] = 1;
  std::deque<std::uint32_t> frontier{goal.value};
  while (!frontier.empty()) {
    const std::uint32_t t = frontier.front();
    frontier.pop_front();
    for (std::uint32_t id : by_target[t]) {
      if (--pending[id] == 0 && !in_set[owner[id]]) {
        in_set[owner[id]] = 1;
        frontier.push_back(owner[id]);
      }
    }
  }

  ActionTable table;
  table.offsets.push_back(0);
  for (std::size_t id = 0; id < all_actions.size();) {
    const std::uint32_t cell = owner[id];
    std::size_t end = id;
    while (end < all_actions.size() && owner[end] == cell) ++end;
    if (in_set[cell]) {
      for (std::size_t k = id; k < end; ++k) {
        if (pending[k] != 0) continue;
        table.actions.push_back(all_actions[k]);
        table.outcomes.push_back(all_outcomes[k]);
      }
      table.cells.push_back(CellIndex{cell});
      table.offsets.push_back(static_cast<std::uint32_t>(table.actions.size()));
    }
    id = end;
  }
  return table;
}

inline double Backup(const ActionTable& table, std::size_t entry,
                     std::span<const Value> g, double cap) {
  double best = cap;
  for (std::uint32_t k = table.offsets[entry]; k < table.offsets[entry + 1];
       ++k) {
    const Value q = ExpectedCost(table.outcomes[k], g);
    if (q.cost() < best) best = q.cost();
  }
  return best;
}

double SweepSerial(const ActionTable& table, std::span<const Value> current,
                   std::span<Value> next, double cap) {
  double residual = 0.0;
  for (std::size_t e = 0; e < table.cells.size(); ++e) {
    const std::uint32_t x = table.cells[e].value;
    const double v = Backup(table, e, current, cap);
    residual = std::max(residual, std::abs(v - current[x].cost()));
    next[x] = Value(v);
  }
  return residual;
}

double SweepOpenMP(const ActionTable& table, std::span<const Value> current,
                   std::span<Value> next, double cap) {
  double residual = 0.0;
  const auto count = static_cast<std::int64_t>(table.cells.size());
#pragma omp parallel for schedule(static) reduction(max : residual)
  for (std::int64_t e = 0; e < count; ++e) {
    const std::uint32_t x = table.cells[e].value;
    const double v = Backup(table, static_cast<std::size_t>(e), current, cap);
    residual = std::max(residual, std::abs(v - current[x].cost()));
    next[x] = Value(v);
  }
  return residual;
}

}  // namespace

void VIConfig::Validate() const {
  if (!(tolerance > 0.0)) throw DomainError("VI tolerance must be > 0");
  if (max_iterations < 1) throw DomainError("VI max_iterations must be >= 1");
  if (!(value_cap > 0.0)) throw DomainError("VI value_cap must be > 0");
}

NoConvergenceError::NoConvergenceError(std::uint64_t iterations,
                                       double residual)
    : std::runtime_error("value iteration did not converge after " +
                         std::to_string(iterations) +
                         " iterations (residual " + std::to_string(residual) +
                         ")"),
      residual_(residual) {}

Solution ValueIterate(const LaneGraph& graph, std::string_view goal,
                      const SolveParams& params, const VIConfig& cfg,
                      SweepKernel kernel) {
  auto x = graph.Find(goal);
  if (!x) throw UnknownGoalError("unknown goal cell '" + std::string(goal) + "'");
  return ValueIterate(graph, *x, params, cfg, kernel);
}

Solution ValueIterate(const LaneGraph& graph, CellIndex goal,
                      const SolveParams& params, const VIConfig& cfg,
                      SweepKernel kernel) {
  cfg.Validate();
  if (goal.value >= graph.size()) {
    throw UnknownGoalError("goal index out of range");
  }
  const std::size_t n = graph.size();
  std::vector<std::uint8_t> reachable;
  const ActionTable table = BuildReachableTable(graph, goal, params, reachable);

  std::vector<Value> current(n);
  current[goal.value] = Value(0.0);
  for (CellIndex c : table.cells) current[c.value] = Value(cfg.value_cap);
  std::vector<Value> next = current;

  Solution sol{goal, params, ValueFunction(n),
               std::vector<std::optional<Action>>(n), {}};

  if (!table.cells.empty()) {
    double residual = 0.0;
    bool converged = false;
    while (sol.stats.vi_iterations < cfg.max_iterations) {
      residual = kernel == SweepKernel::kSerial
                     ? SweepSerial(table, current, next, cfg.value_cap)
                     : SweepOpenMP(table, current, next, cfg.value_cap);
      std::swap(current, next);
      ++sol.stats.vi_iterations;
      if (cfg.record_residuals) sol.stats.vi_residuals.push_back(residual);
      if (residual <= cfg.tolerance) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw NoConvergenceError(sol.stats.vi_iterations, residual);
    }
  }

  for (std::size_t e = 0; e < table.cells.size(); ++e) {
    const CellIndex x = table.cells[e];
    if (current[x.value].cost() >= cfg.value_cap) {
      current[x.value] = Value::Unreachable();
      continue;
    }
    // Argmin under the fixed action order: the table keeps EnumerateActions
    // order, so the first strict improvement wins ties.
    Value best = Value::Unreachable();
    for (std::uint32_t k = table.offsets[e]; k < table.offsets[e + 1]; ++k) {
      const Value q = ExpectedCost(table.outcomes[k], current);
      if (q < best) {
        best = q;
        sol.policy[x.value] = table.actions[k];
      }
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) sol.g[CellIndex{i}] = current[i];
  return sol;
}

}  // namespace lanerouter
