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

// Version-1 policy file: goal, solve parameters and per-cell g and action.

#pragma once

#include <string>
#include <string_view>

#include "lanerouter/lane_graph.h"
#include "lanerouter/router.h"

namespace lanerouter {

/// Cells sorted by id, fixed key order, %.9g numbers, one cell per line.
/// "g": null encodes Unreachable.
std::string SerializePolicy(const LaneGraph& graph, const Solution& solution);

/// Parses a policy written for `graph`. Every referenced id must exist and
/// every action must be valid for its cell; the goal must carry no action.
/// Throws ParseError. Stats of the returned solution are empty.
Solution ParsePolicy(const LaneGraph& graph, std::string_view text);

}  // namespace lanerouter
