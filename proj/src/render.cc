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

#include "lanerouter/render.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

#include "json_text.h"

namespace lanerouter {

namespace {

constexpr double kCellWidth = 24.0;
constexpr double kRowHeight = 28.0;
constexpr double kMargin = 20.0;

struct Box {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;
  double cx() const { return x + w / 2; }
  double cy() const { return y + h / 2; }
};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Row and column of every cell when the graph has layout hints. Rows are
// numbered from the top (largest lane index first); columns are multiples of
// the shortest cell length measured from the smallest s.
struct Grid {
  std::vector<int> row;
  std::vector<int> col;
  std::vector<int> span;
  std::vector<int> lanes;  // lane index of each row, top to bottom
  int cols = 0;
};

Grid LayoutGrid(const LaneGraph& graph) {
  Grid grid;
  double s_min = INFINITY;
  double unit = INFINITY;
  for (const Cell& c : graph.cells()) {
    s_min = std::min(s_min, *c.s);
    unit = std::min(unit, c.length);
    grid.lanes.push_back(*c.lane);
  }
  std::sort(grid.lanes.begin(), grid.lanes.end(), std::greater<>());
  grid.lanes.erase(std::unique(grid.lanes.begin(), grid.lanes.end()),
                   grid.lanes.end());
  for (const Cell& c : graph.cells()) {
    const auto it = std::find(grid.lanes.begin(), grid.lanes.end(), *c.lane);
    grid.row.push_back(static_cast<int>(it - grid.lanes.begin()));
    const int col = static_cast<int>(std::lround((*c.s - s_min) / unit));
    const int span = std::max(1, static_cast<int>(std::lround(c.length / unit)));
    grid.col.push_back(col);
    grid.span.push_back(span);
    grid.cols = std::max(grid.cols, col + span);
  }
  return grid;
}

std::vector<Box> LayoutBoxes(const LaneGraph& graph) {
  std::vector<Box> boxes(graph.size());
  if (graph.has_layout()) {
    const Grid grid = LayoutGrid(graph);
    for (std::size_t i = 0; i < graph.size(); ++i) {
      boxes[i] = {kMargin + grid.col[i] * kCellWidth,
                  kMargin + grid.row[i] * kRowHeight,
                  grid.span[i] * kCellWidth, kRowHeight};
    }
    return boxes;
  }
  const auto side = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(graph.size()))));
  for (std::size_t i = 0; i < graph.size(); ++i) {
    boxes[i] = {kMargin + static_cast<double>(i % side) * 2 * kCellWidth,
                kMargin + static_cast<double>(i / side) * 2 * kRowHeight,
                kCellWidth, kRowHeight};
  }
  return boxes;
}

void Arrow(std::string& out, const Box& from, const Box& to,
           const char* style, ActionKind kind) {
  // Arrows start near the upstream edge of the cell.
  out += "<line class=\"arrow ";
  out += style;
  out += " ";
  out += ToString(kind);
  out += "\" x1=\"" + Num(from.x + 4) + "\" y1=\"" + Num(from.cy()) +
         "\" x2=\"" + Num(to.x + 4) + "\" y2=\"" + Num(to.cy()) + "\"/>\n";
}

bool TowardLeft(const LaneGraph& graph, CellIndex x, CellIndex target) {
  auto left = graph.left(x);
  if (!left) return false;
  auto succ = graph.successors(*left);
  return std::find(succ.begin(), succ.end(), target) != succ.end();
}

char Glyph(const LaneGraph& graph, const Solution& sol, std::uint32_t i) {
  const CellIndex x{i};
  if (x == sol.goal) return 'G';
  if (!sol.g[x].reachable()) return '.';
  const std::optional<Action>& a = sol.policy[i];
  if (!a) return '?';
  if (a->kind == ActionKind::kStay) return '>';
  const bool left = TowardLeft(graph, x, a->success);
  if (a->kind == ActionKind::kLaneChange) return left ? '^' : 'v';
  return left ? 'A' : 'V';
}

std::string GridAscii(const LaneGraph& graph, const Solution& sol) {
  const Grid grid = LayoutGrid(graph);
  std::vector<std::string> rows(grid.lanes.size(),
                                std::string(grid.cols, ' '));
  for (std::uint32_t i = 0; i < graph.size(); ++i) {
    char& slot = rows[grid.row[i]][grid.col[i]];
    slot = slot == ' ' ? Glyph(graph, sol, i) : '#';
    for (int k = 1; k < grid.span[i]; ++k) rows[grid.row[i]][grid.col[i] + k] = '=';
  }
  std::string out =
      "# > stay  ^/v lane change left/right  A/V forced left/right  G goal  "
      ". unreachable  # overlap\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    char label[16];
    std::snprintf(label, sizeof(label), "%4d |", grid.lanes[r]);
    std::string line = label + rows[r];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string TableAscii(const LaneGraph& graph, const Solution& sol) {
  std::size_t width = 2;
  for (const Cell& c : graph.cells()) width = std::max(width, c.id.size());
  auto pad = [&](std::string s) {
    s.resize(std::max(s.size(), width), ' ');
    return s;
  };
  std::string out = pad("id") + "  " + "g" + std::string(15, ' ') +
                    "action\n";
  for (std::uint32_t i = 0; i < graph.size(); ++i) {
    const CellIndex x{i};
    std::string g = sol.g[x].reachable() ? internal::FormatSig9(sol.g[x].cost())
                                         : "unreachable";
    g.resize(std::max<std::size_t>(g.size(), 16), ' ');
    std::string action;
    if (x == sol.goal) {
      action = "goal";
    } else if (sol.policy[i]) {
      action = Describe(graph, *sol.policy[i]);
    } else {
      action = "-";
    }
    out += pad(graph.id(x)) + "  " + g + action + "\n";
  }
  return out;
}

}  // namespace

RenderFormat ParseRenderFormat(std::string_view name) {
  if (name == "svg") return RenderFormat::kSvg;
  if (name == "ascii") return RenderFormat::kAscii;
  throw UnknownFormatError("unknown render format '" + std::string(name) +
                           "' (expected svg or ascii)");
}

std::string RenderSvg(const LaneGraph& graph, const Solution& sol) {
  const std::vector<Box> boxes = LayoutBoxes(graph);
  double width = 2 * kMargin;
  double height = 2 * kMargin;
  for (const Box& b : boxes) {
    width = std::max(width, b.x + b.w + kMargin);
    height = std::max(height, b.y + b.h + kMargin);
  }
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    Num(width) + "\" height=\"" + Num(height) + "\">\n";
  out +=
      "<defs><marker id=\"head\" markerWidth=\"6\" markerHeight=\"6\" "
      "refX=\"5\" refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/>"
      "</marker></defs>\n"
      "<style>.cell{fill:#f4f4f4;stroke:#999;stroke-width:0.5}"
      ".goal{fill:#9c6}.unreachable{fill:#ddd}"
      ".arrow{stroke:#222;stroke-width:1.2;marker-end:url(#head)}"
      ".dashed{stroke-dasharray:3,2}.lane_change{stroke:#14c}"
      ".forced_lane_change{stroke:#c22}</style>\n";
  for (std::uint32_t i = 0; i < graph.size(); ++i) {
    const CellIndex x{i};
    std::string cls = "cell";
    if (x == sol.goal) cls += " goal";
    else if (!sol.g[x].reachable()) cls += " unreachable";
    const Box& b = boxes[i];
    out += "<rect class=\"" + cls + "\" x=\"" + Num(b.x) + "\" y=\"" +
           Num(b.y) + "\" width=\"" + Num(b.w) + "\" height=\"" + Num(b.h) +
           "\"><title>" + Escape(graph.id(x)) + "</title></rect>\n";
  }
  for (std::uint32_t i = 0; i < graph.size(); ++i) {
    const std::optional<Action>& a = sol.policy[i];
    if (!a || !sol.g[CellIndex{i}].reachable()) continue;
    Arrow(out, boxes[i], boxes[a->success.value], "solid", a->kind);
    if (a->failure) {
      Arrow(out, boxes[i], boxes[a->failure->value], "dashed", a->kind);
    }
  }
  out += "</svg>\n";
  return out;
}

std::string RenderAscii(const LaneGraph& graph, const Solution& sol) {
  return graph.has_layout() ? GridAscii(graph, sol) : TableAscii(graph, sol);
}

std::string Render(const LaneGraph& graph, const Solution& sol,
                   RenderFormat format) {
  return format == RenderFormat::kSvg ? RenderSvg(graph, sol)
                                      : RenderAscii(graph, sol);
}

}  // namespace lanerouter
