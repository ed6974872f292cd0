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

#include "lanerouter/lane_graph.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

namespace lanerouter {

namespace {

void Add(std::vector<Violation>& out, std::string rule,
         std::vector<std::string> cells, std::string message) {
  out.push_back({std::move(rule), std::move(cells), std::move(message)});
}

// Checks one side of the neighbor relation: `cell.<side> = other` requires
// `other.<mirror> = cell`.
void CheckNeighbor(const Cell& cell, const std::optional<std::string>& ref,
                   const char* side, const char* mirror,
                   const std::unordered_map<std::string, std::uint32_t>& index,
                   const std::vector<Cell>& cells,
                   std::vector<Violation>& out) {
  if (!ref) return;
  if (*ref == cell.id) {
    Add(out, "self-reference", {cell.id},
        "cell is its own " + std::string(side) + " neighbor");
    return;
  }
  auto it = index.find(*ref);
  if (it == index.end()) {
    Add(out, "dangling-reference", {cell.id, *ref},
        std::string(side) + " neighbor '" + *ref + "' does not exist");
    return;
  }
  const Cell& other = cells[it->second];
  const std::optional<std::string>& back =
      std::string_view(mirror) == "right" ? other.right : other.left;
  if (!back || *back != cell.id) {
    Add(out, "neighbor-asymmetry", {cell.id, *ref},
        "'" + cell.id + "'." + side + " = '" + *ref + "' but '" + *ref +
            "'." + mirror + " = " + (back ? "'" + *back + "'" : "null"));
  }
}

}  // namespace

std::string ValidationReport::ToString() const {
  if (ok()) return "ok\n";
  std::ostringstream os;
  for (const Violation& v : violations) {
    os << v.rule << " [";
    for (std::size_t i = 0; i < v.cells.size(); ++i) {
      if (i) os << ", ";
      os << v.cells[i];
    }
    os << "]: " << v.message << "\n";
  }
  return os.str();
}

GraphValidationError::GraphValidationError(ValidationReport report)
    : std::runtime_error("lane graph validation failed:\n" +
                         report.ToString()),
      report_(std::move(report)) {}

LaneGraph BuildOrThrow(std::vector<Cell> cells) {
  BuildResult result = LaneGraph::Build(std::move(cells));
  if (auto* report = std::get_if<ValidationReport>(&result)) {
    throw GraphValidationError(std::move(*report));
  }
  return std::get<LaneGraph>(std::move(result));
}

BuildResult LaneGraph::Build(std::vector<Cell> cells) {
  std::stable_sort(cells.begin(), cells.end(),
                   [](const Cell& a, const Cell& b) { return a.id < b.id; });

  std::vector<Violation> violations;
  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(cells.size());
  for (std::uint32_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    if (c.id.empty()) {
      Add(violations, "empty-id", {""}, "cell id must be nonempty");
      continue;
    }
    if (!index.emplace(c.id, i).second) {
      Add(violations, "duplicate-id", {c.id},
          "id '" + c.id + "' appears more than once");
    }
  }

  for (const Cell& c : cells) {
    if (!(c.length > 0.0) || !std::isfinite(c.length)) {
      Add(violations, "nonpositive-length", {c.id},
          "length must be a finite value > 0");
    }
    if (!(c.cost > 0.0) || !std::isfinite(c.cost)) {
      Add(violations, "nonpositive-cost", {c.id},
          "cost must be a finite value > 0");
    }
    CheckNeighbor(c, c.left, "left", "right", index, cells, violations);
    CheckNeighbor(c, c.right, "right", "left", index, cells, violations);

    std::set<std::string_view> seen;
    for (const std::string& s : c.successors) {
      if (s == c.id) {
        Add(violations, "self-reference", {c.id},
            "cell lists itself as a successor");
        continue;
      }
      if (!seen.insert(s).second) {
        Add(violations, "duplicate-successor", {c.id, s},
            "successor '" + s + "' listed twice");
        continue;
      }
      if (!index.contains(s)) {
        Add(violations, "dangling-reference", {c.id, s},
            "successor '" + s + "' does not exist");
      }
    }
  }

  if (!violations.empty()) {
    std::stable_sort(violations.begin(), violations.end(),
                     [](const Violation& a, const Violation& b) {
                       return std::tie(a.cells, a.rule, a.message) <
                              std::tie(b.cells, b.rule, b.message);
                     });
    return ValidationReport{std::move(violations)};
  }

  LaneGraph g;
  const std::size_t n = cells.size();
  g.length_.resize(n);
  g.cost_.resize(n);
  g.left_.assign(n, kNoCell);
  g.right_.assign(n, kNoCell);
  g.neighbor_offsets_.assign(n + 1, 0);
  g.succ_offsets_.assign(n + 1, 0);
  g.pred_offsets_.assign(n + 1, 0);

  for (std::uint32_t i = 0; i < n; ++i) {
    const Cell& c = cells[i];
    g.length_[i] = c.length;
    g.cost_[i] = c.cost;
    if (c.left) g.left_[i] = index.at(*c.left);
    if (c.right) g.right_[i] = index.at(*c.right);
    if (c.left) g.neighbor_list_.push_back(CellIndex{g.left_[i]});
    if (c.right) g.neighbor_list_.push_back(CellIndex{g.right_[i]});
    g.neighbor_offsets_[i + 1] =
        static_cast<std::uint32_t>(g.neighbor_list_.size());

    std::vector<CellIndex> succ;
    succ.reserve(c.successors.size());
    for (const std::string& s : c.successors) succ.push_back({index.at(s)});
    std::sort(succ.begin(), succ.end());
    g.succ_list_.insert(g.succ_list_.end(), succ.begin(), succ.end());
    g.succ_offsets_[i + 1] = static_cast<std::uint32_t>(g.succ_list_.size());
    for (CellIndex s : succ) ++g.pred_offsets_[s.value + 1];
  }

  // Predecessor index is the transpose of the successor relation; filling it
  // in increasing source order keeps each list sorted.
  for (std::size_t i = 0; i < n; ++i) {
    g.pred_offsets_[i + 1] += g.pred_offsets_[i];
  }
  g.pred_list_.resize(g.succ_list_.size());
  std::vector<std::uint32_t> fill(g.pred_offsets_.begin(),
                                  g.pred_offsets_.end() - 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (CellIndex s : g.successors(CellIndex{i})) {
      g.pred_list_[fill[s.value]++] = CellIndex{i};
    }
  }

  g.cells_ = std::move(cells);
  g.index_ = std::move(index);
  return g;
}

std::optional<CellIndex> LaneGraph::Find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return CellIndex{it->second};
}

CellIndex LaneGraph::IndexOf(std::string_view id) const {
  if (auto x = Find(id)) return *x;
  throw std::out_of_range("unknown cell id '" + std::string(id) + "'");
}

bool LaneGraph::has_layout() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) {
    return c.lane.has_value() && c.s.has_value();
  });
}

}  // namespace lanerouter
