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

#include <algorithm>

#include <json.hpp>

#include "json_text.h"
#include "lanerouter/lane_graph.h"

namespace lanerouter {

namespace {

using nlohmann::json;
using internal::FormatRoundTrip;
using internal::Quote;

std::string Where(std::size_t i) { return "cell " + std::to_string(i); }

const json& Require(const json& obj, const char* key, std::size_t i) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(Where(i) + ": missing required field \"" + key + "\"");
  }
  return *it;
}

double RequireNumber(const json& obj, const char* key, std::size_t i) {
  const json& v = Require(obj, key, i);
  if (!v.is_number()) {
    throw ParseError(Where(i) + ": field \"" + key + "\" must be a number");
  }
  return v.get<double>();
}

std::optional<std::string> NullableId(const json& obj, const char* key,
                                      std::size_t i) {
  const json& v = Require(obj, key, i);
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) {
    throw ParseError(Where(i) + ": field \"" + key +
                     "\" must be a string id or null");
  }
  return v.get<std::string>();
}

Cell ParseCell(const json& obj, std::size_t i) {
  if (!obj.is_object()) throw ParseError(Where(i) + ": must be an object");
  static const char* const kKnown[] = {"id",    "length",     "cost", "left",
                                       "right", "successors", "lane", "s"};
  for (const auto& [key, _] : obj.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) ==
        std::end(kKnown)) {
      throw ParseError(Where(i) + ": unknown field \"" + key + "\"");
    }
  }

  Cell c;
  const json& id = Require(obj, "id", i);
  if (!id.is_string()) throw ParseError(Where(i) + ": \"id\" must be a string");
  c.id = id.get<std::string>();
  c.length = RequireNumber(obj, "length", i);
  c.cost = RequireNumber(obj, "cost", i);
  c.left = NullableId(obj, "left", i);
  c.right = NullableId(obj, "right", i);

  const json& succ = Require(obj, "successors", i);
  if (!succ.is_array()) {
    throw ParseError(Where(i) + ": \"successors\" must be an array");
  }
  for (const json& s : succ) {
    if (!s.is_string()) {
      throw ParseError(Where(i) + ": successor ids must be strings");
    }
    c.successors.push_back(s.get<std::string>());
  }

  if (auto it = obj.find("lane"); it != obj.end() && !it->is_null()) {
    if (!it->is_number_integer()) {
      throw ParseError(Where(i) + ": \"lane\" must be an integer");
    }
    c.lane = it->get<int>();
  }
  if (auto it = obj.find("s"); it != obj.end() && !it->is_null()) {
    if (!it->is_number()) throw ParseError(Where(i) + ": \"s\" must be a number");
    c.s = it->get<double>();
  }
  return c;
}

std::string NullableOut(const std::optional<std::string>& v) {
  return v ? Quote(*v) : "null";
}

}  // namespace

BuildResult ParseGraph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph document must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "version" && key != "cells") {
      throw ParseError("unknown top-level key \"" + key + "\"");
    }
  }
  auto version = doc.find("version");
  if (version == doc.end()) throw ParseError("missing \"version\"");
  if (!version->is_number_integer() || version->get<long long>() != 1) {
    throw ParseError("unsupported graph version " + version->dump());
  }
  auto cells = doc.find("cells");
  if (cells == doc.end() || !cells->is_array()) {
    throw ParseError("missing \"cells\" array");
  }

  std::vector<Cell> parsed;
  parsed.reserve(cells->size());
  for (std::size_t i = 0; i < cells->size(); ++i) {
    parsed.push_back(ParseCell((*cells)[i], i));
  }
  return LaneGraph::Build(std::move(parsed));
}

std::string SerializeGraph(const LaneGraph& graph) {
  std::string out = "{\"version\":1,\"cells\":[";
  bool first = true;
  for (const Cell& c : graph.cells()) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "{\"id\":" + Quote(c.id);
    out += ",\"length\":" + FormatRoundTrip(c.length);
    out += ",\"cost\":" + FormatRoundTrip(c.cost);
    out += ",\"left\":" + NullableOut(c.left);
    out += ",\"right\":" + NullableOut(c.right);
    out += ",\"successors\":[";
    for (std::size_t i = 0; i < c.successors.size(); ++i) {
      if (i) out += ",";
      out += Quote(c.successors[i]);
    }
    out += "]";
    if (c.lane) out += ",\"lane\":" + std::to_string(*c.lane);
    if (c.s) out += ",\"s\":" + FormatRoundTrip(*c.s);
    out += "}";
  }
  out += "]}\n";
  return out;
}

}  // namespace lanerouter
