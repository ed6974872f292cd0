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

// Action set, transition model and Bellman q-values of the lane routing MDP.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lanerouter/lane_change.h"
#include "lanerouter/lane_graph.h"

namespace lanerouter {

struct SolveParams {
  LaneChangeRate alpha;
  double lane_change_cost = 0.0;         // c_lc
  double forced_lane_change_cost = 0.0;  // c_flc

  /// Validates ranges; c_flc defaults to 1/alpha when omitted.
  static SolveParams Make(double alpha, double lane_change_cost,
                          std::optional<double> forced_lane_change_cost = {});
};

/// Expected cost-to-go. Unreachable is a sentinel, never an infinity, and
/// absorbs every arithmetic operation it touches.
class Value {
 public:
  constexpr Value() = default;  // Unreachable
  /// `cost` must be finite; +infinity is the Unreachable encoding.
  constexpr explicit Value(double cost) : cost_(cost) {}
  static constexpr Value Unreachable() { return Value(); }

  constexpr bool reachable() const { return cost_ != kUnreachable; }
  /// Precondition: reachable().
  constexpr double cost() const { return cost_; }

  /// Unreachable compares greater than every finite value.
  friend constexpr bool operator<(Value a, Value b) {
    return a.cost_ < b.cost_;
  }
  friend constexpr bool operator==(Value a, Value b) {
    return a.cost_ == b.cost_;
  }

 private:
  static constexpr double kUnreachable =
      std::numeric_limits<double>::infinity();
  double cost_ = kUnreachable;
};

enum class ActionKind : std::uint8_t { kStay = 0, kLaneChange = 1, kForced = 2 };

const char* ToString(ActionKind kind);

/// One routing action taken from a cell. `failure` is set iff the kind is
/// kLaneChange. Ordering (kind, success, failure) is the argmin tie order.
struct Action {
  ActionKind kind = ActionKind::kStay;
  CellIndex success;
  std::optional<CellIndex> failure;

  friend auto operator<=>(const Action&, const Action&) = default;
  friend bool operator==(const Action&, const Action&) = default;

  static Action Stay(CellIndex to) { return {ActionKind::kStay, to, {}}; }
  static Action LaneChange(CellIndex success, CellIndex failure) {
    return {ActionKind::kLaneChange, success, failure};
  }
  static Action Forced(CellIndex to) { return {ActionKind::kForced, to, {}}; }
};

struct Outcome {
  CellIndex target;
  double probability = 0.0;
  double cost = 0.0;
};

/// At most two outcomes; stored inline so the solvers never allocate here.
class OutcomeSet {
 public:
  void push_back(Outcome o) { items_[size_++] = o; }
  std::size_t size() const { return size_; }
  const Outcome* begin() const { return items_.data(); }
  const Outcome* end() const { return items_.data() + size_; }
  const Outcome& operator[](std::size_t i) const { return items_[i]; }

 private:
  std::array<Outcome, 2> items_{};
  std::size_t size_ = 0;
};

/// Per-cell values indexed by CellIndex.
class ValueFunction {
 public:
  ValueFunction() = default;
  explicit ValueFunction(std::size_t n) : values_(n) {}

  std::size_t size() const { return values_.size(); }
  Value operator[](CellIndex x) const { return values_[x.value]; }
  Value& operator[](CellIndex x) { return values_[x.value]; }
  std::span<const Value> values() const { return values_; }

 private:
  std::vector<Value> values_;
};

/// Stay < LaneChange < ForcedLaneChange, then by (success, failure) id.
std::vector<Action> EnumerateActions(const LaneGraph& graph, CellIndex x);

/// Throws DomainError if `a` is not one of EnumerateActions(graph, x).
void CheckActionValid(const LaneGraph& graph, CellIndex x, const Action& a);

/// Outcome list of `a` taken from `x`; assumes `a` is valid for `x`.
OutcomeSet Outcomes(const LaneGraph& graph, const SolveParams& params,
                    CellIndex x, const Action& a);

/// Sum of probability * (cost + g(target)); Unreachable if any
/// positive-probability target is Unreachable. Both solvers go through this
/// so their floating point results agree bit for bit.
inline Value ExpectedCost(const OutcomeSet& outcomes,
                          std::span<const Value> g) {
  double total = 0.0;
  for (const Outcome& o : outcomes) {
    if (o.probability == 0.0) continue;
    Value next = g[o.target.value];
    if (!next.reachable()) return Value::Unreachable();
    total += o.probability * (o.cost + next.cost());
  }
  return Value(total);
}

Value QValue(const LaneGraph& graph, const SolveParams& params,
             const ValueFunction& g, CellIndex x, const Action& a);

/// Human readable, e.g. "lane_change(r4|m4)".
std::string Describe(const LaneGraph& graph, const Action& a);

}  // namespace lanerouter
