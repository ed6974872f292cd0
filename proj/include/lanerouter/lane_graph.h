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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace lanerouter {

/// Dense position of a cell inside a LaneGraph. Cells are stored sorted by
/// id, so comparing two indices of the same graph compares their ids.
struct CellIndex {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(CellIndex, CellIndex) = default;
};

inline constexpr std::uint32_t kNoCell = UINT32_MAX;

/// One drivable lane segment as it appears in a graph file.
///
/// `lane` and `s` are optional layout hints written by the scenario
/// generators (lateral lane row and longitudinal start position in meters).
/// They do not take part in routing.
struct Cell {
  std::string id;
  double length = 0.0;
  double cost = 0.0;
  std::optional<std::string> left;
  std::optional<std::string> right;
  std::vector<std::string> successors;
  std::optional<int> lane;
  std::optional<double> s;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Violation {
  std::string rule;
  std::vector<std::string> cells;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string ToString() const;
};

class LaneGraph;
using BuildResult = std::variant<LaneGraph, ValidationReport>;

/// Immutable, validated lane graph with a derived predecessor index.
///
/// Invariants after Build:
///   x1 = left(x2)  <=> x2 = right(x1)
///   x1 in succ(x2) <=> x2 in pred(x1)
///   every cell has length > 0 and cost > 0
class LaneGraph {
 public:
  /// Validates `cells` and returns either the graph or a report listing
  /// every violation, sorted by offending cell id.
  static BuildResult Build(std::vector<Cell> cells);

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  /// Cells in id order; `cells()[i]` is the cell at CellIndex{i}.
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(CellIndex x) const { return cells_[x.value]; }
  const std::string& id(CellIndex x) const { return cells_[x.value].id; }

  std::optional<CellIndex> Find(std::string_view id) const;
  /// Throws std::out_of_range naming the id when absent.
  CellIndex IndexOf(std::string_view id) const;

  double length(CellIndex x) const { return length_[x.value]; }
  double cost(CellIndex x) const { return cost_[x.value]; }

  std::optional<CellIndex> left(CellIndex x) const {
    return Opt(left_[x.value]);
  }
  std::optional<CellIndex> right(CellIndex x) const {
    return Opt(right_[x.value]);
  }
  /// Left neighbor first, then right; at most two entries.
  std::span<const CellIndex> neighbors(CellIndex x) const {
    return Slice(neighbor_offsets_, neighbor_list_, x);
  }
  std::span<const CellIndex> successors(CellIndex x) const {
    return Slice(succ_offsets_, succ_list_, x);
  }
  std::span<const CellIndex> predecessors(CellIndex x) const {
    return Slice(pred_offsets_, pred_list_, x);
  }

  /// True when every cell carries both layout hints.
  bool has_layout() const;

  friend bool operator==(const LaneGraph& a, const LaneGraph& b) {
    return a.cells_ == b.cells_;
  }

 private:
  LaneGraph() = default;

  static std::optional<CellIndex> Opt(std::uint32_t v) {
    if (v == kNoCell) return std::nullopt;
    return CellIndex{v};
  }
  static std::span<const CellIndex> Slice(
      const std::vector<std::uint32_t>& offsets,
      const std::vector<CellIndex>& list, CellIndex x) {
    return std::span<const CellIndex>(list.data() + offsets[x.value],
                                      offsets[x.value + 1] - offsets[x.value]);
  }

  std::vector<Cell> cells_;
  std::unordered_map<std::string, std::uint32_t> index_;
  // Dense copies of the per-cell numbers the solvers read in their inner
  // loops; Cell records are too wide to stay cache resident.
  std::vector<double> length_;
  std::vector<double> cost_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> neighbor_offsets_;
  std::vector<CellIndex> neighbor_list_;
  std::vector<std::uint32_t> succ_offsets_;
  std::vector<CellIndex> succ_list_;
  std::vector<std::uint32_t> pred_offsets_;
  std::vector<CellIndex> pred_list_;
};

/// Raised by BuildOrThrow and by parsers that must produce a graph.
class GraphValidationError : public std::runtime_error {
 public:
  explicit GraphValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

LaneGraph BuildOrThrow(std::vector<Cell> cells);

/// Malformed JSON, unknown version, missing or mistyped field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the version-1 graph JSON format. Throws ParseError on schema
/// problems; structural problems come back as a ValidationReport.
BuildResult ParseGraph(std::string_view text);

/// Deterministic: cells sorted by id, fixed key order, no predecessor index.
std::string SerializeGraph(const LaneGraph& graph);

}  // namespace lanerouter
