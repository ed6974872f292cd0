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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

namespace lanerouter::testing {

double RefSuccessProb(double alpha, double length) {
  return 1.0 - std::exp(-alpha * length);
}

std::vector<Action> RefActions(const LaneGraph& graph, CellIndex x) {
  std::vector<Action> stay, lc, forced;
  const Cell& cell = graph.cell(x);
  std::vector<CellIndex> succ;
  for (const std::string& s : cell.successors) succ.push_back(graph.IndexOf(s));
  for (CellIndex s : succ) stay.push_back(Action::Stay(s));
  for (const auto& nb : {cell.left, cell.right}) {
    if (!nb) continue;
    for (const std::string& ns : graph.cell(graph.IndexOf(*nb)).successors) {
      const CellIndex target = graph.IndexOf(ns);
      forced.push_back(Action::Forced(target));
      for (CellIndex s : succ) lc.push_back(Action::LaneChange(target, s));
    }
  }
  std::vector<Action> all;
  for (auto* group : {&stay, &lc, &forced}) {
    std::sort(group->begin(), group->end());
    group->erase(std::unique(group->begin(), group->end()), group->end());
    all.insert(all.end(), group->begin(), group->end());
  }
  return all;
}

std::optional<double> RefQ(const LaneGraph& graph, const SolveParams& params,
                           const Solution& sol, CellIndex x, const Action& a) {
  const double c = graph.cost(x);
  const double f = RefSuccessProb(params.alpha.per_meter(), graph.length(x));
  auto g = [&](CellIndex t) -> std::optional<double> {
    if (!sol.g[t].reachable()) return std::nullopt;
    return sol.g[t].cost();
  };
  switch (a.kind) {
    case ActionKind::kStay: {
      auto gs = g(a.success);
      if (!gs) return std::nullopt;
      return c + *gs;
    }
    case ActionKind::kForced: {
      auto gs = g(a.success);
      if (!gs) return std::nullopt;
      return params.lane_change_cost + c +
             (1.0 - f) * params.forced_lane_change_cost + *gs;
    }
    case ActionKind::kLaneChange: {
      auto gn = g(a.success);
      auto gf = g(*a.failure);
      if (!gn || !gf) return std::nullopt;
      return f * (params.lane_change_cost + c + *gn) + (1.0 - f) * (c + *gf);
    }
  }
  return std::nullopt;
}

std::vector<bool> RefReachable(const LaneGraph& graph, CellIndex goal) {
  std::vector<bool> in(graph.size(), false);
  in[goal.value] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t i = 0; i < graph.size(); ++i) {
      if (in[i]) continue;
      for (const Action& a : RefActions(graph, CellIndex{i})) {
        bool ok = in[a.success.value];
        if (a.failure) ok = ok && in[a.failure->value];
        if (ok) {
          in[i] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return in;
}

BellmanReport CheckBellman(const LaneGraph& graph, const Solution& sol,
                           double tie_tol) {
  BellmanReport report;
  const std::vector<bool> reachable = RefReachable(graph, sol.goal);
  for (std::uint32_t i = 0; i < graph.size(); ++i) {
    const CellIndex x{i};
    const std::string& id = graph.id(x);
    if (reachable[i] != sol.g[x].reachable()) {
      report.problems.push_back(id + ": reachability mismatch");
      continue;
    }
    if (x == sol.goal) {
      if (!(sol.g[x] == Value(0.0))) report.problems.push_back(id + ": goal g != 0");
      if (sol.policy[i]) report.problems.push_back(id + ": goal has an action");
      continue;
    }
    if (!reachable[i]) {
      if (sol.policy[i]) report.problems.push_back(id + ": unreachable cell has an action");
      continue;
    }
    double best = INFINITY;
    for (const Action& a : RefActions(graph, x)) {
      if (auto q = RefQ(graph, sol.params, sol, x, a)) best = std::min(best, *q);
    }
    const double residual = std::abs(sol.g[x].cost() - best);
    if (residual > report.max_residual) {
      report.max_residual = residual;
      report.worst_cell = id;
    }
    if (!sol.policy[i]) {
      report.problems.push_back(id + ": reachable cell without action");
      continue;
    }
    const Action& pi = *sol.policy[i];
    const auto qpi = RefQ(graph, sol.params, sol, x, pi);
    const double tol = tie_tol * std::max(1.0, std::abs(best));
    if (!qpi || *qpi > best + std::max(tol, 1e-9)) {
      report.problems.push_back(id + ": policy action is not a minimizer");
      continue;
    }
    for (const Action& a : RefActions(graph, x)) {
      if (!(a < pi)) break;
      auto q = RefQ(graph, sol.params, sol, x, a);
      if (q && *q <= best + tol) {
        report.problems.push_back(id + ": " + Describe(graph, a) +
                                  " ties the minimum but precedes " +
                                  Describe(graph, pi));
        break;
      }
    }
  }
  return report;
}

std::vector<std::pair<CellIndex, CellIndex>> PolicyTransitions(
    const LaneGraph& graph, const Solution& sol) {
  std::vector<std::pair<CellIndex, CellIndex>> edges;
  for (std::uint32_t i = 0; i < graph.size(); ++i) {
    const auto& a = sol.policy[i];
    if (!a) continue;
    const CellIndex x{i};
    edges.emplace_back(x, a->success);
    // A lane change fails with probability exp(-alpha * length) > 0.
    if (a->failure &&
        RefSuccessProb(sol.params.alpha.per_meter(), graph.length(x)) < 1.0) {
      edges.emplace_back(x, *a->failure);
    }
  }
  return edges;
}

std::vector<std::string> NonDecreasingTransitions(const LaneGraph& graph,
                                                  const Solution& sol) {
  std::vector<std::string> bad;
  for (auto [from, to] : PolicyTransitions(graph, sol)) {
    if (!sol.g[from].reachable() || !sol.g[to].reachable() ||
        !(sol.g[from].cost() > sol.g[to].cost())) {
      bad.push_back(graph.id(from) + " -> " + graph.id(to));
    }
  }
  return bad;
}

std::vector<std::string> FindPolicyCycle(const LaneGraph& graph,
                                         const Solution& sol) {
  const std::size_t n = graph.size();
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [from, to] : PolicyTransitions(graph, sol)) {
    adj[from.value].push_back(to.value);
  }
  // Iterative DFS with colors: 0 new, 1 on stack, 2 done.
  std::vector<std::uint8_t> color(n, 0);
  std::vector<std::uint32_t> parent(n, UINT32_MAX);
  for (std::uint32_t root = 0; root < n; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next == adj[u].size()) {
        color[u] = 2;
        stack.pop_back();
        continue;
      }
      const std::uint32_t v = adj[u][next++];
      if (color[v] == 1) {
        std::vector<std::string> cycle{graph.id(CellIndex{v})};
        for (std::uint32_t w = u; w != v; w = parent[w]) {
          cycle.push_back(graph.id(CellIndex{w}));
        }
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (color[v] == 0) {
        color[v] = 1;
        parent[v] = u;
        stack.emplace_back(v, 0);
      }
    }
  }
  return {};
}

bool SuccessorPathExists(const LaneGraph& graph, CellIndex from, CellIndex to) {
  std::vector<bool> seen(graph.size(), false);
  std::deque<CellIndex> queue{from};
  seen[from.value] = true;
  while (!queue.empty()) {
    const CellIndex x = queue.front();
    queue.pop_front();
    if (x == to) return true;
    for (CellIndex s : graph.successors(x)) {
      if (!seen[s.value]) {
        seen[s.value] = true;
        queue.push_back(s);
      }
    }
  }
  return false;
}

}  // namespace lanerouter::testing
