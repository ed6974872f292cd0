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

#include "random_graph.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace lanerouter::testing {

namespace {

struct Segment {
  int lanes = 1;
  int length = 1;  // cells per lane
  std::size_t first = 0;

  std::size_t At(std::size_t lane, std::size_t i) const {
    return first + lane * static_cast<std::size_t>(length) + i;
  }
};

}  // namespace

RandomInstance MakeRandomInstance(std::uint64_t seed, bool monotone,
                                  const RandomGraphOptions& options) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  auto integer = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  const int budget = integer(2, options.max_cells);
  std::vector<Segment> segments;
  std::vector<Cell> cells;
  int used = 0;
  while (used < budget) {
    Segment seg;
    seg.lanes = integer(1, options.max_lanes);
    seg.length = std::max(1, std::min(integer(1, 25), (budget - used) / seg.lanes));
    seg.first = cells.size();
    const std::size_t s = segments.size();
    for (int lane = 0; lane < seg.lanes; ++lane) {
      for (int i = 0; i < seg.length; ++i) {
        Cell c;
        c.id = "s" + std::to_string(s) + "_" + std::to_string(lane) + "_" +
               std::to_string(i);
        c.length = uniform(1.0, 60.0);
        c.cost = c.length * uniform(options.min_ratio, options.max_ratio);
        cells.push_back(std::move(c));
      }
    }
    for (int lane = 0; lane < seg.lanes; ++lane) {
      for (int i = 0; i < seg.length; ++i) {
        Cell& c = cells[seg.At(lane, i)];
        if (i + 1 < seg.length) c.successors.push_back(cells[seg.At(lane, i + 1)].id);
        if (lane > 0) c.right = cells[seg.At(lane - 1, i)].id;
        if (lane + 1 < seg.lanes) c.left = cells[seg.At(lane + 1, i)].id;
      }
    }
    used += seg.lanes * seg.length;
    segments.push_back(seg);
  }

  // Link lane ends to lane starts of other segments. Mostly forward, so
  // most cells can reach the end of the network.
  auto link = [&](std::size_t from, std::size_t to) {
    auto& succ = cells[from].successors;
    if (from == to) return;
    if (std::find(succ.begin(), succ.end(), cells[to].id) != succ.end()) return;
    succ.push_back(cells[to].id);
  };
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const Segment& seg = segments[s];
    for (int lane = 0; lane < seg.lanes; ++lane) {
      const std::size_t end = seg.At(lane, seg.length - 1);
      const int fanout = integer(0, 10) < 2 ? 2 : (integer(0, 10) < 1 ? 0 : 1);
      for (int k = 0; k < fanout; ++k) {
        std::size_t target_seg;
        if (s + 1 < segments.size() &&
            uniform(0.0, 1.0) >= options.back_link_prob) {
          target_seg = static_cast<std::size_t>(
              integer(static_cast<int>(s) + 1,
                      std::min<int>(static_cast<int>(segments.size()) - 1,
                                    static_cast<int>(s) + 2)));
        } else {
          target_seg = static_cast<std::size_t>(
              integer(0, static_cast<int>(segments.size()) - 1));
        }
        const Segment& t = segments[target_seg];
        const int target_lane =
            std::clamp(lane + integer(-1, 1), 0, t.lanes - 1);
        link(end, t.At(target_lane, 0));
      }
    }
  }

  // The goal sits in the last segment most of the time.
  std::size_t goal_pos;
  if (integer(0, 3) > 0) {
    const Segment& last = segments.back();
    goal_pos = last.At(integer(0, last.lanes - 1), last.length - 1);
  } else {
    goal_pos = static_cast<std::size_t>(
        integer(0, static_cast<int>(cells.size()) - 1));
  }
  const std::string goal_id = cells[goal_pos].id;

  double min_ratio = INFINITY;
  for (const Cell& c : cells) min_ratio = std::min(min_ratio, c.cost / c.length);
  const double alpha = std::exp(uniform(std::log(0.002), std::log(0.2)));
  const double clc = integer(0, 9) == 0 ? 0.0 : uniform(0.0, 60.0);
  const double bound = min_ratio / alpha;
  const double cflc =
      monotone ? bound * uniform(0.0, 1.0) : bound * uniform(3.0, 30.0);

  LaneGraph graph = BuildOrThrow(std::move(cells));
  const CellIndex goal = graph.IndexOf(goal_id);
  return RandomInstance{std::move(graph), goal,
                        SolveParams::Make(alpha, clc, cflc)};
}

}  // namespace lanerouter::testing
