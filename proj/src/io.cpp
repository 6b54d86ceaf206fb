// Copyright 2026 The Gradation Authors
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

#include "gradation/io.hpp"

#include <charconv>
#include <string>

#include "gradation/error.hpp"

namespace gradation {
namespace {

using nlohmann::json;

Vertex vertex_of(const json& j, const char* what) {
  if (!j.is_number_unsigned()) {
    throw InvalidInput(std::string(what) + " must be a non-negative integer");
  }
  return j.get<Vertex>();
}

Tone tone_of(const json& j) {
  if (!j.is_string()) throw InvalidInput("tones must be \"p/q\" strings");
  return Tone::parse(j.get<std::string>());
}

json tones_to_json(std::span<const Tone> tones) {
  json out = json::array();
  for (const Tone& t : tones) out.push_back(t.str());
  return out;
}

std::vector<Tone> tones_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of tones");
  std::vector<Tone> out;
  for (const auto& t : j) out.push_back(tone_of(t));
  return out;
}

json optional_vertex(const std::optional<Vertex>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<Vertex> optional_vertex_of(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return vertex_of(j[key], key);
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  json out = {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

Problem problem_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("problem must be a JSON object");
  if (!j.contains("graph")) return {graph_from_json(j), {}};
  Problem p{graph_from_json(j["graph"]), {}};
  if (j.contains("fixed") && !j["fixed"].is_null()) {
    if (!j["fixed"].is_object()) {
      throw InvalidInput("\"fixed\" must map vertex strings to tones");
    }
    for (const auto& [key, value] : j["fixed"].items()) {
      Vertex v = 0;
      const auto* end = key.data() + key.size();
      auto [ptr, ec] = std::from_chars(key.data(), end, v);
      if (key.empty() || ec != std::errc() || ptr != end) {
        throw InvalidInput("fixed key '" + key + "' is not a vertex index");
      }
      if (v >= p.graph.vertex_count()) {
        throw InvalidInput("fixed vertex " + key + " out of range");
      }
      p.fixed[v] = tone_of(value);
    }
  }
  return p;
}

Problem load_problem(std::string_view text, std::optional<GraphFormat> format) {
  const GraphFormat f = format.value_or(detect_graph_format(text));
  if (f != GraphFormat::kJson) return {parse_graph(text, f), {}};
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    // Delegate for the line-numbered diagnostic.
    return {parse_graph(text, GraphFormat::kJson), {}};
  }
  return problem_from_json(j);
}

json greyscale_to_json(const Greyscale& f) {
  return {{"tones", tones_to_json(f.tones())}};
}

Greyscale greyscale_from_json(const json& j) {
  if (!j.is_object() || !j.contains("tones")) {
    throw InvalidInput("greyscale needs \"tones\"");
  }
  return Greyscale(tones_from_json(j["tones"]));
}

json trace_to_json(const CcmTrace& trace) {
  json iterations = json::array();
  for (const auto& it : trace.iterations) {
    json pairs = json::array();
    for (const Edge& e : it.maximizing_pairs) pairs.push_back({e.u, e.v});
    json coloured = json::array();
    for (const auto& c : it.coloured) coloured.push_back({c.vertex, c.tone.str()});
    json saturated = json::array();
    for (const auto& s : it.saturated) {
      saturated.push_back({s.edge.u, s.edge.v, s.tone.str()});
    }
    iterations.push_back({{"index", it.index},
                          {"M", it.max_increase.str()},
                          {"S", std::move(pairs)},
                          {"coloured", std::move(coloured)},
                          {"saturated", std::move(saturated)},
                          {"components_before", it.components_before}});
  }
  json fill = nullptr;
  if (trace.flood_fill) {
    fill = json::array();
    for (const auto& f : *trace.flood_fill) {
      fill.push_back({{"anchor", f.anchor}, {"component", f.component}});
    }
  }
  return {{"iterations", std::move(iterations)}, {"flood_fill", std::move(fill)}};
}

CcmTrace trace_from_json(const json& j) {
  CcmTrace trace;
  try {
    for (const auto& it : j.at("iterations")) {
      CcmIteration rec;
      rec.index = it.at("index").get<std::size_t>();
      rec.max_increase = tone_of(it.at("M"));
      for (const auto& p : it.at("S")) {
        rec.maximizing_pairs.emplace_back(vertex_of(p.at(0), "S"),
                                          vertex_of(p.at(1), "S"));
      }
      for (const auto& c : it.at("coloured")) {
        rec.coloured.push_back({vertex_of(c.at(0), "coloured"), tone_of(c.at(1))});
      }
      for (const auto& s : it.at("saturated")) {
        rec.saturated.push_back(
            {Edge(vertex_of(s.at(0), "saturated"), vertex_of(s.at(1), "saturated")),
             tone_of(s.at(2))});
      }
      rec.components_before = it.at("components_before").get<std::size_t>();
      trace.iterations.push_back(std::move(rec));
    }
    if (!j.at("flood_fill").is_null()) {
      std::vector<FloodFill> fills;
      for (const auto& f : j.at("flood_fill")) {
        fills.push_back({vertex_of(f.at("anchor"), "anchor"),
                         f.at("component").get<std::vector<Vertex>>()});
      }
      trace.flood_fill = std::move(fills);
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed trace: ") + e.what());
  }
  return trace;
}

json solution_set_to_json(const SolutionSet& set, std::size_t max_solutions) {
  json solutions = json::array();
  json traces = json::array();
  for (std::size_t i = 0; i < set.solutions.size() && i < max_solutions; ++i) {
    const Solution& s = set.solutions[i];
    solutions.push_back(
        {{"tones", tones_to_json(s.greyscale.tones())},
         {"anchor",
          {{"zero", optional_vertex(s.anchor.zero)},
           {"one", optional_vertex(s.anchor.one)}}}});
    traces.push_back(trace_to_json(s.trace));
  }
  return {{"vector", tones_to_json(set.vector.components())},
          {"solutions", std::move(solutions)},
          {"trace", std::move(traces)},
          {"stats",
           {{"candidates", set.stats.candidates},
            {"pruned", set.stats.pruned},
            {"solutions", set.solutions.size()}}}};
}

SolutionSet solution_set_from_json(const json& j) {
  SolutionSet set;
  try {
    set.vector = GradationVector::from_sorted(tones_from_json(j.at("vector")));
    const auto& solutions = j.at("solutions");
    const auto& traces = j.at("trace");
    if (!solutions.is_array() || !traces.is_array() ||
        solutions.size() != traces.size()) {
      throw InvalidInput("\"solutions\" and \"trace\" must be aligned arrays");
    }
    for (std::size_t i = 0; i < solutions.size(); ++i) {
      Solution s;
      s.greyscale = Greyscale(tones_from_json(solutions[i].at("tones")));
      s.vector = set.vector;
      s.trace = trace_from_json(traces[i]);
      const auto& anchor = solutions[i].at("anchor");
      s.anchor = {optional_vertex_of(anchor, "zero"),
                  optional_vertex_of(anchor, "one")};
      set.solutions.push_back(std::move(s));
    }
    set.stats.candidates = j.at("stats").at("candidates").get<std::size_t>();
    set.stats.pruned = j.at("stats").at("pruned").get<std::size_t>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed solution set: ") + e.what());
  }
  return set;
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const Check& c : report.checks) {
    json entry = {{"name", c.name}, {"pass", c.pass}};
    if (c.witness) entry["witness"] = *c.witness;
    if (c.skipped) entry["skipped"] = true;
    if (c.flagged) entry["flagged"] = true;
    checks.push_back(std::move(entry));
  }
  return {{"overall", report.overall()}, {"checks", std::move(checks)}};
}

}  // namespace gradation
