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

// Policy drawings. Each cell with an action gets a solid arrow to its
// success target; lane changes add a dashed arrow to the failure target.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lanerouter/lane_graph.h"
#include "lanerouter/router.h"

namespace lanerouter {

enum class RenderFormat { kSvg, kAscii };

class UnknownFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "svg" or "ascii".
RenderFormat ParseRenderFormat(std::string_view name);

/// Cells are placed by their layout hints (row = lane, column = s) when the
/// graph has them, otherwise on a square grid in id order. Arrow elements are
/// <line> with class "arrow solid" or "arrow dashed". Output bytes depend
/// only on the inputs.
std::string RenderSvg(const LaneGraph& graph, const Solution& solution);

/// With layout hints: one text row per lane, leftmost lane on top, one
/// character per cell. Without: a table in id order.
std::string RenderAscii(const LaneGraph& graph, const Solution& solution);

std::string Render(const LaneGraph& graph, const Solution& solution,
                   RenderFormat format);

}  // namespace lanerouter
