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

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>

#include "gradation/graph.hpp"
#include "gradation/greyscale.hpp"
#include "gradation/parse.hpp"
#include "gradation/solver.hpp"
#include "gradation/verify.hpp"
#include "json.hpp"

namespace gradation {

struct Problem {
  Graph graph;
  IncompleteGreyscale fixed;  // empty for the unrestricted problem
};

// {"n": int, "edges": [[u, v], ...], "labels": [...]?}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// {"graph": {...}, "fixed": {"<vertex>": "p/q", ...}}; "fixed" optional.
// A bare graph object is accepted as a problem without prefixed tones.
Problem problem_from_json(const nlohmann::json& j);

// Reads a problem in any supported format; `format` overrides detection.
Problem load_problem(std::string_view text,
                     std::optional<GraphFormat> format = std::nullopt);

// {"tones": ["0", "1/2", "1"]}
nlohmann::json greyscale_to_json(const Greyscale& f);
Greyscale greyscale_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const CcmTrace& trace);
CcmTrace trace_from_json(const nlohmann::json& j);

// Emits at most `max_solutions` solutions; stats.solutions always carries
// the full count.
nlohmann::json solution_set_to_json(
    const SolutionSet& set,
    std::size_t max_solutions = std::numeric_limits<std::size_t>::max());
SolutionSet solution_set_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace gradation
