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

#include "lanerouter/policy_io.h"

#include <json.hpp>

#include "json_text.h"

namespace lanerouter {

namespace {

using nlohmann::json;
using internal::FormatSig9;
using internal::Quote;

const json& Field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(where + ": missing required field \"" + key + "\"");
  }
  return *it;
}

double Number(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_number()) {
    throw ParseError(where + ": field \"" + key + "\" must be a number");
  }
  return v.get<double>();
}

CellIndex Ref(const LaneGraph& graph, const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": cell ids must be strings");
  const std::string id = v.get<std::string>();
  auto x = graph.Find(id);
  if (!x) throw ParseError(where + ": unknown cell id '" + id + "'");
  return *x;
}

ActionKind KindFromString(const std::string& s, const std::string& where) {
  if (s == "stay") return ActionKind::kStay;
  if (s == "lane_change") return ActionKind::kLaneChange;
  if (s == "forced_lane_change") return ActionKind::kForced;
  throw ParseError(where + ": unknown action kind \"" + s + "\"");
}

std::optional<Action> ParseAction(const LaneGraph& graph, const json& v,
                                  const std::string& where) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_object()) throw ParseError(where + ": action must be an object");
  const json& kind = Field(v, "kind", where);
  if (!kind.is_string()) throw ParseError(where + ": \"kind\" must be a string");
  Action a;
  a.kind = KindFromString(kind.get<std::string>(), where);
  a.success = Ref(graph, Field(v, "success", where), where);
  auto failure = v.find("failure");
  if (a.kind == ActionKind::kLaneChange) {
    if (failure == v.end()) {
      throw ParseError(where + ": lane_change requires \"failure\"");
    }
    a.failure = Ref(graph, *failure, where);
  } else if (failure != v.end()) {
    throw ParseError(where + ": \"failure\" is only allowed on lane_change");
  }
  return a;
}

}  // namespace

std::string SerializePolicy(const LaneGraph& graph, const Solution& sol) {
  const SolveParams& p = sol.params;
  std::string out = "{\"version\":1,\"goal\":" + Quote(graph.id(sol.goal));
  out += ",\"params\":{\"alpha\":" + FormatSig9(p.alpha.per_meter());
  out += ",\"lane_change_cost\":" + FormatSig9(p.lane_change_cost);
  out += ",\"forced_lane_change_cost\":" +
         FormatSig9(p.forced_lane_change_cost) + "}";
  out += ",\"cells\":[";
  for (std::uint32_t i = 0; i < graph.size(); ++i) {
    const CellIndex x{i};
    out += i ? ",\n" : "\n";
    out += "{\"id\":" + Quote(graph.id(x)) + ",\"g\":";
    const Value g = sol.g[x];
    out += g.reachable() ? FormatSig9(g.cost()) : "null";
    out += ",\"action\":";
    const std::optional<Action>& a = sol.policy[i];
    if (!a) {
      out += "null";
    } else {
      out += "{\"kind\":" + Quote(ToString(a->kind));
      out += ",\"success\":" + Quote(graph.id(a->success));
      if (a->failure) out += ",\"failure\":" + Quote(graph.id(*a->failure));
      out += "}";
    }
    out += "}";
  }
  out += "]}\n";
  return out;
}

Solution ParsePolicy(const LaneGraph& graph, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("policy document must be an object");
  const std::string top = "policy";
  const json& version = Field(doc, "version", top);
  if (!version.is_number_integer() || version.get<long long>() != 1) {
    throw ParseError("unsupported policy version " + version.dump());
  }
  const CellIndex goal = Ref(graph, Field(doc, "goal", top), "goal");

  const json& params = Field(doc, "params", top);
  if (!params.is_object()) throw ParseError("\"params\" must be an object");
  const SolveParams sp = [&] {
    try {
      return SolveParams::Make(
          Number(params, "alpha", "params"),
          Number(params, "lane_change_cost", "params"),
          Number(params, "forced_lane_change_cost", "params"));
    } catch (const DomainError& e) {
      throw ParseError(std::string("params: ") + e.what());
    }
  }();

  const std::size_t n = graph.size();
  Solution sol{goal, sp, ValueFunction(n),
               std::vector<std::optional<Action>>(n), {}};
  std::vector<std::uint8_t> seen(n, 0);
  const json& cells = Field(doc, "cells", top);
  if (!cells.is_array()) throw ParseError("\"cells\" must be an array");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const json& c = cells[i];
    std::string where = "policy cell " + std::to_string(i);
    if (!c.is_object()) throw ParseError(where + ": must be an object");
    const CellIndex x = Ref(graph, Field(c, "id", where), where);
    where += " ('" + graph.id(x) + "')";
    if (seen[x.value]) throw ParseError(where + ": duplicate cell");
    seen[x.value] = 1;
    const json& g = Field(c, "g", where);
    if (!g.is_null()) {
      if (!g.is_number()) throw ParseError(where + ": \"g\" must be a number or null");
      sol.g[x] = Value(g.get<double>());
    }
    sol.policy[x.value] = ParseAction(graph, Field(c, "action", where), where);
    if (const auto& a = sol.policy[x.value]) {
      if (x == goal) throw ParseError(where + ": the goal cannot carry an action");
      try {
        CheckActionValid(graph, x, *a);
      } catch (const DomainError& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!seen[i]) {
      throw ParseError("policy is missing cell '" + graph.id(CellIndex{i}) + "'");
    }
  }
  return sol;
}

}  // namespace lanerouter
