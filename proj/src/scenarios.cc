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

#include "lanerouter/scenarios.h"

#include <cmath>
#include <vector>

#include "lanerouter/lane_change.h"

namespace lanerouter {

namespace {

// Number of whole cells of `cell_length` in `total`; throws unless the
// ratio is integral within 1e-9.
int WholeCells(double total, double cell_length, const char* what) {
  const double ratio = total / cell_length;
  const double rounded = std::round(ratio);
  if (!(std::abs(ratio - rounded) <= 1e-9 * std::max(1.0, ratio))) {
    throw DomainError(std::string(what) + " must be a multiple of cell_length");
  }
  return static_cast<int>(rounded);
}

std::string Name(const std::string& lane, int i) {
  return lane + std::to_string(i);
}

// Appends a single lane of `count` cells; cell i links to i+1. Returns the
// index of the first appended cell in `cells`.
std::size_t AddLane(std::vector<Cell>& cells, const std::string& lane,
                    int count, double cell_length, int row, double s0) {
  const std::size_t first = cells.size();
  for (int i = 0; i < count; ++i) {
    Cell c;
    c.id = Name(lane, i);
    c.length = cell_length;
    c.cost = cell_length;
    if (i + 1 < count) c.successors.push_back(Name(lane, i + 1));
    c.lane = row;
    c.s = s0 + i * cell_length;
    cells.push_back(std::move(c));
  }
  return first;
}

// Makes lanes `right` and `left` (both `count` cells, starting at the given
// offsets in `cells`) neighbors cell by cell.
void PairLanes(std::vector<Cell>& cells, std::size_t right, std::size_t left,
               int count) {
  for (int i = 0; i < count; ++i) {
    cells[right + i].left = cells[left + i].id;
    cells[left + i].right = cells[right + i].id;
  }
}

void Link(std::vector<Cell>& cells, std::size_t from, const std::string& to) {
  cells[from].successors.push_back(to);
}

}  // namespace

void MergeScenarioParams::Validate() const {
  if (n_lanes < 1) throw DomainError("n_lanes must be >= 1");
  if (!(cell_length > 0.0) || !std::isfinite(cell_length)) {
    throw DomainError("cell_length must be finite and > 0");
  }
  if (!(road_length > 0.0) || !std::isfinite(road_length)) {
    throw DomainError("road_length must be finite and > 0");
  }
  if (!(merge_position > 0.0) || !(merge_position < road_length)) {
    throw DomainError("merge_position must lie in (0, road_length)");
  }
  if (!(ramp_length > 0.0) || !std::isfinite(ramp_length)) {
    throw DomainError("ramp_length must be finite and > 0");
  }
  if (!(c_left >= 0.0) || !std::isfinite(c_left)) {
    throw DomainError("c_left must be finite and >= 0");
  }
  if (!(c_merge >= 0.0) || !std::isfinite(c_merge)) {
    throw DomainError("c_merge must be finite and >= 0");
  }
  cells_per_lane();
  merge_index();
  ramp_cells();
}

int MergeScenarioParams::cells_per_lane() const {
  return WholeCells(road_length, cell_length, "road_length");
}

int MergeScenarioParams::merge_index() const {
  return WholeCells(merge_position, cell_length, "merge_position");
}

int MergeScenarioParams::ramp_cells() const {
  return WholeCells(ramp_length, cell_length, "ramp_length");
}

std::string MergeLaneName(int m, int n_lanes) {
  if (m == 0) return "r";
  if (m == n_lanes - 1) return "l";
  if (n_lanes == 3) return "m";
  return "m" + std::to_string(m);
}

std::string MergeGoal(const MergeScenarioParams& p) {
  p.Validate();
  return Name("r", p.cells_per_lane() - 1);
}

LaneGraph GenHighwayMerge(const MergeScenarioParams& p) {
  p.Validate();
  const int n = p.cells_per_lane();
  const int k = p.merge_index();
  const int ramp = p.ramp_cells();
  const double ell = p.cell_length;

  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(n) * p.n_lanes + ramp);
  std::vector<std::size_t> lane_start;
  for (int m = 0; m < p.n_lanes; ++m) {
    const std::size_t first =
        AddLane(cells, MergeLaneName(m, p.n_lanes), n, ell, m, 0.0);
    for (int i = 0; i < n; ++i) cells[first + i].cost = ell * (1.0 + m * p.c_left);
    if (m > 0) PairLanes(cells, lane_start.back(), first, n);
    lane_start.push_back(first);
  }
  const std::size_t ramp_first =
      AddLane(cells, "ramp", ramp, ell, -1, p.merge_position - ramp * ell);
  Link(cells, ramp_first + ramp - 1, Name("r", k));

  // Cells feeding the merge cell r{k}.
  cells[lane_start[0] + k - 1].cost += p.c_merge;
  cells[ramp_first + ramp - 1].cost += p.c_merge;
  return BuildOrThrow(std::move(cells));
}

void TwoRouteScenarioParams::Validate() const {
  if (!(cell_length > 0.0) || !std::isfinite(cell_length)) {
    throw DomainError("cell_length must be finite and > 0");
  }
  if (start_cells < 1 || interior_cells < 1 || perimeter_cells < 1 ||
      loop_cells < 1 || north_cells < 1) {
    throw DomainError("two-route cell counts must be >= 1");
  }
}

LaneGraph GenTwoRoute(const TwoRouteScenarioParams& p) {
  p.Validate();
  const double ell = p.cell_length;
  const double east = (p.start_cells + p.interior_cells) * ell;
  std::vector<Cell> cells;

  const std::size_t s_r = AddLane(cells, "s_r", p.start_cells, ell, 7, 0.0);
  const std::size_t s_l = AddLane(cells, "s_l", p.start_cells, ell, 8, 0.0);
  PairLanes(cells, s_r, s_l, p.start_cells);
  const std::size_t i_r = AddLane(cells, "i_r", p.interior_cells, ell, 4,
                                  p.start_cells * ell);
  const std::size_t i_l = AddLane(cells, "i_l", p.interior_cells, ell, 5,
                                  p.start_cells * ell);
  PairLanes(cells, i_r, i_l, p.interior_cells);

  const std::size_t w_s = AddLane(cells, "w_s", p.perimeter_cells, ell, 6, 0.0);
  const std::size_t b_e =
      AddLane(cells, "b_e", 2 * p.perimeter_cells, ell, 0, 0.0);
  const std::size_t e_n =
      AddLane(cells, "e_n", p.perimeter_cells, ell, -1, east);
  const std::size_t n = AddLane(cells, "n", p.north_cells, ell, 9, east);
  const std::size_t e_s = AddLane(cells, "e_s", p.loop_cells, ell, 2, east);
  const std::size_t b_w = AddLane(cells, "b_w", p.loop_cells, ell, 1, 0.0);
  const std::size_t w_n = AddLane(cells, "w_n", p.loop_cells, ell, 3, 0.0);

  Cell goal;
  goal.id = kTwoRouteGoal;
  goal.length = ell;
  goal.cost = ell;
  goal.lane = 9;
  goal.s = east + p.north_cells * ell;

  Link(cells, s_r + p.start_cells - 1, Name("w_s", 0));
  Link(cells, s_l + p.start_cells - 1, Name("i_l", 0));
  Link(cells, i_l + p.interior_cells - 1, Name("n", 0));
  Link(cells, i_r + p.interior_cells - 1, Name("e_s", 0));
  Link(cells, w_s + p.perimeter_cells - 1, Name("b_e", 0));
  Link(cells, b_e + 2 * p.perimeter_cells - 1, Name("e_n", 0));
  Link(cells, e_n + p.perimeter_cells - 1, Name("n", 0));
  Link(cells, n + p.north_cells - 1, goal.id);
  Link(cells, e_s + p.loop_cells - 1, Name("b_w", 0));
  Link(cells, b_w + p.loop_cells - 1, Name("w_n", 0));
  Link(cells, w_n + p.loop_cells - 1, Name("i_r", 0));
  cells.push_back(std::move(goal));
  return BuildOrThrow(std::move(cells));
}

std::string StraightGoal(double length, double cell_length) {
  if (!(cell_length > 0.0) || !(length > 0.0)) {
    throw DomainError("length and cell_length must be > 0");
  }
  return Name("L", WholeCells(length, cell_length, "length") - 1);
}

LaneGraph GenTwoLaneStraight(double length, double cell_length) {
  if (!(cell_length > 0.0) || !std::isfinite(cell_length) ||
      !(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("length and cell_length must be finite and > 0");
  }
  const int n = WholeCells(length, cell_length, "length");
  std::vector<Cell> cells;
  cells.reserve(2 * static_cast<std::size_t>(n));
  const std::size_t right = AddLane(cells, "R", n, cell_length, 0, 0.0);
  const std::size_t left = AddLane(cells, "L", n, cell_length, 1, 0.0);
  PairLanes(cells, right, left, n);
  return BuildOrThrow(std::move(cells));
}

}  // namespace lanerouter
