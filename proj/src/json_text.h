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

// Small helpers for emitting JSON text with a fixed key order and stable
// number formatting. Parsing goes through nlohmann::json.

#pragma once

#include <string>
#include <string_view>

namespace lanerouter::internal {

/// Shortest representation that parses back to the same double, with a
/// trailing ".0" on integral values.
std::string FormatRoundTrip(double v);

/// printf("%.9g") style.
std::string FormatSig9(double v);

/// Quoted and escaped JSON string literal.
std::string Quote(std::string_view s);

}  // namespace lanerouter::internal
