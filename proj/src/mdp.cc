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

#include "lanerouter/mdp.h"

#include <algorithm>
#include <cmath>

namespace lanerouter {

SolveParams SolveParams::Make(double alpha, double lane_change_cost,
                              std::optional<double> forced_lane_change_cost) {
  LaneChangeRate rate(alpha);
  const double flc = forced_lane_change_cost.value_or(1.0 / alpha);
  if (!(lane_change_cost >= 0.0) || !std::isfinite(lane_change_cost)) {
    throw DomainError("lane change cost must be finite and >= 0");
  }
  if (!(flc >= 0.0) || !std::isfinite(flc)) {
    throw DomainError("forced lane change cost must be finite and >= 0");
  }
  return SolveParams{rate, lane_change_cost, flc};
}

const char* ToString(ActionKind kind) {
  switch (kind) {
    case ActionKind::kStay: return "stay";
    case ActionKind::kLaneChange: return "lane_change";
    case ActionKind::kForced: return "forced_lane_change";
  }
  return "?";
}

std::vector<Action> EnumerateActions(const LaneGraph& graph, CellIndex x) {
  if (x.value >= graph.size()) {
    throw std::out_of_range("cell index out of range");
  }
  std::vector<Action> actions;
  for (CellIndex s : graph.successors(x)) actions.push_back(Action::Stay(s));
  for (CellIndex n : graph.neighbors(x)) {
    for (CellIndex ns : graph.successors(n)) {
      for (CellIndex s : graph.successors(x)) {
        actions.push_back(Action::LaneChange(ns, s));
      }
      actions.push_back(Action::Forced(ns));
    }
  }
  std::sort(actions.begin(), actions.end());
  // Left and right neighbors may share a successor (a fork joining back).
  actions.erase(std::unique(actions.begin(), actions.end()), actions.end());
  return actions;
}

void CheckActionValid(const LaneGraph& graph, CellIndex x, const Action& a) {
  const bool has_failure = a.failure.has_value();
  if (has_failure != (a.kind == ActionKind::kLaneChange)) {
    throw DomainError("failure target present iff action is a lane change");
  }
  auto in = [](std::span<const CellIndex> set, CellIndex c) {
    return std::find(set.begin(), set.end(), c) != set.end();
  };
  bool ok = false;
  if (a.kind == ActionKind::kStay) {
    ok = in(graph.successors(x), a.success);
  } else {
    for (CellIndex n : graph.neighbors(x)) {
      ok = ok || in(graph.successors(n), a.success);
    }
    if (has_failure) ok = ok && in(graph.successors(x), *a.failure);
  }
  if (!ok) {
    throw DomainError("action " + Describe(graph, a) + " is not available at '" +
                      graph.id(x) + "'");
  }
}

OutcomeSet Outcomes(const LaneGraph& graph, const SolveParams& params,
                    CellIndex x, const Action& a) {
  const double c = graph.cost(x);
  OutcomeSet out;
  switch (a.kind) {
    case ActionKind::kStay:
      out.push_back({a.success, 1.0, c});
      break;
    case ActionKind::kLaneChange: {
      const double f = SuccessProb(params.alpha, graph.length(x));
      out.push_back({a.success, f, params.lane_change_cost + c});
      out.push_back({*a.failure, 1.0 - f, c});
      break;
    }
    case ActionKind::kForced: {
      const double f = SuccessProb(params.alpha, graph.length(x));
      out.push_back({a.success, 1.0,
                     params.lane_change_cost + c +
                         (1.0 - f) * params.forced_lane_change_cost});
      break;
    }
  }
  return out;
}

Value QValue(const LaneGraph& graph, const SolveParams& params,
             const ValueFunction& g, CellIndex x, const Action& a) {
  CheckActionValid(graph, x, a);
  return ExpectedCost(Outcomes(graph, params, x, a), g.values());
}

std::string Describe(const LaneGraph& graph, const Action& a) {
  std::string out = ToString(a.kind);
  out += "(" + graph.id(a.success);
  if (a.failure) out += "|" + graph.id(*a.failure);
  out += ")";
  return out;
}

}  // namespace lanerouter
