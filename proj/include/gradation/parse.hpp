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

#include <string_view>

#include "gradation/graph.hpp"

namespace gradation {

enum class GraphFormat { kEdgeList, kDimacs, kJson };

// Edge list: "u v" per line, 0-based, '#' comments, blank lines ignored.
// DIMACS: "p edge n m" header then "e u v" lines, 1-based, 'c' comments.
// JSON: {"n": int, "edges": [[u, v], ...], "labels": [..]?}.
// Errors are ParseError carrying the offending line.
Graph parse_graph(std::string_view text, GraphFormat format);

// '{' -> JSON, a leading 'p'/'c' record -> DIMACS, otherwise edge list.
GraphFormat detect_graph_format(std::string_view text);

}  // namespace gradation
