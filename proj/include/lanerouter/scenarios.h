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

// Parametric road networks used in the experiments and tests.
//
// Cell ids are the lane name followed by the cell number along the lane, for
// example "r0", "m12", "l499". Every generated cell carries layout hints
// (lane row, start position s in meters).

#pragma once

#include <string>

#include "lanerouter/lane_graph.h"

namespace lanerouter {

/// Straight highway with an on-ramp joining the rightmost lane.
///
/// Lanes are named r (rightmost), m (middle), l (leftmost); with more than
/// three lanes the middle ones are m1, m2, ... counted leftward. The ramp is
/// a single-lane chain "ramp0", "ramp1", ... whose last cell feeds
/// r{merge_position / cell_length}.
struct MergeScenarioParams {
  int n_lanes = 3;
  double cell_length = 10.0;
  double road_length = 5000.0;
  double merge_position = 1000.0;
  double ramp_length = 20.0;
  double c_left = 0.1;   // cost factor per lane away from the rightmost
  double c_merge = 0.0;  // added to every cell whose successor is a merge

  void Validate() const;
  int cells_per_lane() const;
  int merge_index() const;
  int ramp_cells() const;
};

/// cost = length * (1 + m * c_left), m = 0 for the rightmost lane and the
/// ramp, plus c_merge on cells feeding a multi-predecessor cell. The goal is
/// the last rightmost-lane cell, see MergeGoal.
LaneGraph GenHighwayMerge(const MergeScenarioParams& p);
std::string MergeGoal(const MergeScenarioParams& p);
/// Lane name for row m (0 = rightmost).
std::string MergeLaneName(int m, int n_lanes);

/// Small city network with two ways from the start road to the goal.
///
///   start road (lanes s_r, s_l)
///     s_l -> interior road (lanes i_r, i_l), left turn
///     s_r -> perimeter  w_s -> b_e -> e_n -> north road n -> goal "g"
///   interior road
///     i_l -> north road (left turn)
///     i_r -> loop  e_s -> b_w -> w_n -> back into i_r
///
/// Reaching the interior route from s_r needs one lane change; the perimeter
/// needs none but is longer. A vehicle stuck in i_r can circle the southern
/// block and retry its lane change. All cells cost their length.
struct TwoRouteScenarioParams {
  double cell_length = 10.0;
  int start_cells = 10;      // per lane of the start road
  int interior_cells = 10;   // per lane of the interior road
  int perimeter_cells = 10;  // w_s and e_n; b_e has twice as many
  int loop_cells = 10;       // per leg of the loop
  int north_cells = 5;

  void Validate() const;
};

LaneGraph GenTwoRoute(const TwoRouteScenarioParams& p);
inline constexpr const char* kTwoRouteGoal = "g";

/// Two-lane straight road of `length` meters split into `cell_length` cells,
/// lanes "R" (right) and "L" (left), cost = length. The goal is the last
/// left-lane cell, see StraightGoal.
LaneGraph GenTwoLaneStraight(double length, double cell_length);
std::string StraightGoal(double length, double cell_length);

}  // namespace lanerouter
