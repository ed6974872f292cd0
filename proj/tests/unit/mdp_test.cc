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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lanerouter/mdp.h"
#include "lanerouter/router.h"
#include "oracles.h"
#include "random_graph.h"

namespace lanerouter {
namespace {

Cell MakeCell(std::string id, std::vector<std::string> succ, double length,
              double cost) {
  Cell c;
  c.id = std::move(id);
  c.length = length;
  c.cost = cost;
  c.successors = std::move(succ);
  return c;
}

// Two lanes of two cells: x -> xs on the right, n -> ns on the left.
LaneGraph TwoByTwo(double length = 100.0, double cost = 10.0) {
  Cell x = MakeCell("x", {"xs"}, length, cost);
  Cell n = MakeCell("n", {"ns"}, length, cost);
  x.left = "n";
  n.right = "x";
  Cell xs = MakeCell("xs", {}, length, cost);
  Cell ns = MakeCell("ns", {}, length, cost);
  xs.left = "ns";
  ns.right = "xs";
  return BuildOrThrow({x, n, xs, ns});
}

const double kE = std::exp(-1.0);

TEST(EnumerateActions, SingleSuccessorNoNeighbors) {
  LaneGraph g = BuildOrThrow({MakeCell("a", {"b"}, 1, 1), MakeCell("b", {}, 1, 1)});
  auto actions = EnumerateActions(g, g.IndexOf("a"));
  ASSERT_EQ(actions.size(), 1u);
  EXPECT_EQ(actions[0], Action::Stay(g.IndexOf("b")));
}

TEST(EnumerateActions, LeftNeighborWithOneSuccessor) {
  LaneGraph g = TwoByTwo();
  auto actions = EnumerateActions(g, g.IndexOf("x"));
  ASSERT_EQ(actions.size(), 3u);
  EXPECT_EQ(actions[0], Action::Stay(g.IndexOf("xs")));
  EXPECT_EQ(actions[1], Action::LaneChange(g.IndexOf("ns"), g.IndexOf("xs")));
  EXPECT_EQ(actions[2], Action::Forced(g.IndexOf("ns")));
}

TEST(EnumerateActions, TwoSuccessorsAndRightNeighborWithTwo) {
  Cell x = MakeCell("x", {"a", "b"}, 10, 10);
  Cell n = MakeCell("n", {"c", "d"}, 10, 10);
  x.right = "n";
  n.left = "x";
  LaneGraph g = BuildOrThrow({x, n, MakeCell("a", {}, 1, 1), MakeCell("b", {}, 1, 1),
                              MakeCell("c", {}, 1, 1), MakeCell("d", {}, 1, 1)});
  auto actions = EnumerateActions(g, g.IndexOf("x"));
  EXPECT_EQ(actions.size(), 2u + 4u + 2u);
  EXPECT_TRUE(std::is_sorted(actions.begin(), actions.end()));
  EXPECT_EQ(actions, testing::RefActions(g, g.IndexOf("x")));
}

TEST(Outcomes, Stay) {
  LaneGraph g = TwoByTwo();
  auto p = SolveParams::Make(0.01, 5.0, 100.0);
  OutcomeSet o = Outcomes(g, p, g.IndexOf("x"), Action::Stay(g.IndexOf("xs")));
  ASSERT_EQ(o.size(), 1u);
  EXPECT_EQ(o[0].target, g.IndexOf("xs"));
  EXPECT_EQ(o[0].probability, 1.0);
  EXPECT_EQ(o[0].cost, 10.0);
}

TEST(Outcomes, LaneChangeHundredMeters) {
  LaneGraph g = TwoByTwo();
  auto p = SolveParams::Make(0.01, 5.0, 100.0);
  OutcomeSet o = Outcomes(g, p, g.IndexOf("x"),
                          Action::LaneChange(g.IndexOf("ns"), g.IndexOf("xs")));
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0].target, g.IndexOf("ns"));
  EXPECT_NEAR(o[0].probability, 0.6321206, 1e-7);
  EXPECT_EQ(o[0].cost, 15.0);
  EXPECT_EQ(o[1].target, g.IndexOf("xs"));
  EXPECT_NEAR(o[1].probability, 0.3678794, 1e-7);
  EXPECT_EQ(o[1].cost, 10.0);
}

TEST(Outcomes, ForcedHundredMeters) {
  LaneGraph g = TwoByTwo();
  auto p = SolveParams::Make(0.01, 5.0, 100.0);
  OutcomeSet o = Outcomes(g, p, g.IndexOf("x"), Action::Forced(g.IndexOf("ns")));
  ASSERT_EQ(o.size(), 1u);
  EXPECT_EQ(o[0].probability, 1.0);
  EXPECT_NEAR(o[0].cost, 15.0 + kE * 100.0, 1e-12);
  EXPECT_NEAR(o[0].cost, 51.78794, 1e-5);
}

TEST(QValue, Examples) {
  LaneGraph g = TwoByTwo();
  auto p = SolveParams::Make(0.01, 5.0, 100.0);
  ValueFunction v(g.size());
  v[g.IndexOf("xs")] = Value(5.0);
  EXPECT_EQ(QValue(g, p, v, g.IndexOf("x"), Action::Stay(g.IndexOf("xs"))),
            Value(15.0));

  v[g.IndexOf("ns")] = Value(3.0);
  v[g.IndexOf("xs")] = Value(20.0);
  const Value q = QValue(g, p, v, g.IndexOf("x"),
                         Action::LaneChange(g.IndexOf("ns"), g.IndexOf("xs")));
  ASSERT_TRUE(q.reachable());
  EXPECT_NEAR(q.cost(), (1 - kE) * 18.0 + kE * 30.0, 1e-12);
  EXPECT_NEAR(q.cost(), 22.41455, 1e-5);

  v[g.IndexOf("xs")] = Value::Unreachable();
  EXPECT_FALSE(QValue(g, p, v, g.IndexOf("x"),
                      Action::LaneChange(g.IndexOf("ns"), g.IndexOf("xs")))
                   .reachable());
}

TEST(QValue, InvalidActionRejected) {
  LaneGraph g = TwoByTwo();
  auto p = SolveParams::Make(0.01, 5.0, 100.0);
  ValueFunction v(g.size());
  EXPECT_THROW(QValue(g, p, v, g.IndexOf("x"), Action::Stay(g.IndexOf("ns"))),
               DomainError);
  EXPECT_THROW(QValue(g, p, v, g.IndexOf("x"), Action::Forced(g.IndexOf("xs"))),
               DomainError);
  Action bad = Action::Stay(g.IndexOf("xs"));
  bad.failure = g.IndexOf("xs");
  EXPECT_THROW(CheckActionValid(g, g.IndexOf("x"), bad), DomainError);
}

TEST(SolveParamsMake, DefaultsAndRanges) {
  auto p = SolveParams::Make(0.01, 5.0);
  EXPECT_DOUBLE_EQ(p.forced_lane_change_cost, 100.0);
  EXPECT_THROW(SolveParams::Make(0.0, 5.0), DomainError);
  EXPECT_THROW(SolveParams::Make(0.01, -1.0), DomainError);
  EXPECT_THROW(SolveParams::Make(0.01, 1.0, -2.0), DomainError);
}

TEST(ValueOrder, UnreachableIsGreatest) {
  EXPECT_TRUE(Value(1e300) < Value::Unreachable());
  EXPECT_FALSE(Value::Unreachable() < Value(0.0));
  EXPECT_FALSE(Value::Unreachable() < Value::Unreachable());
  EXPECT_EQ(Value::Unreachable(), Value());
}

// Properties over random graphs: probabilities sum to one, costs are
// nonnegative, Stay is exact and q is monotone in every g it reads.
TEST(MdpProperty, OutcomeAndQInvariants) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> gv(0.0, 1000.0);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto inst = testing::MakeRandomInstance(seed, seed % 2 == 0);
    const LaneGraph& g = inst.graph;
    ValueFunction v(g.size());
    for (std::uint32_t i = 0; i < g.size(); ++i) v[CellIndex{i}] = Value(gv(rng));
    for (std::uint32_t i = 0; i < g.size(); ++i) {
      const CellIndex x{i};
      auto actions = EnumerateActions(g, x);
      ASSERT_EQ(actions, testing::RefActions(g, x));
      for (const Action& a : actions) {
        OutcomeSet o = Outcomes(g, inst.params, x, a);
        double total = 0.0;
        for (const Outcome& out : o) {
          total += out.probability;
          EXPECT_GE(out.cost, 0.0);
          EXPECT_GE(out.probability, 0.0);
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
        const Value q = QValue(g, inst.params, v, x, a);
        if (a.kind == ActionKind::kStay) {
          EXPECT_EQ(q.cost(), g.cost(x) + v[a.success].cost());
        }
        for (const Outcome& out : o) {
          ValueFunction bumped = v;
          bumped[out.target] = Value(v[out.target].cost() + gv(rng));
          EXPECT_GE(QValue(g, inst.params, bumped, x, a).cost(), q.cost());
        }
      }
    }
  }
}

}  // namespace
}  // namespace lanerouter
