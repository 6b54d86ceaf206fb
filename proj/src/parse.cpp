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

#include "gradation/parse.hpp"

#include <charconv>
#include <map>
#include <string>
#include <vector>

#include "gradation/error.hpp"
#include "gradation/io.hpp"

namespace gradation {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::uint64_t parse_index(std::string_view field, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(field) + "'");
  }
  if (value > UINT32_MAX / 2) {
    throw ParseError(line, "vertex index too large: " + std::string(field));
  }
  return value;
}

// Collects edges while remembering the line each one came from.
class EdgeCollector {
 public:
  void add(std::uint64_t a, std::uint64_t b, std::size_t line) {
    if (a == b) {
      throw ParseError(line, "self-loop at vertex " + std::to_string(a));
    }
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    auto [it, inserted] = seen_.emplace(e, line);
    if (!inserted) {
      throw ParseError(line, "duplicate edge {" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) + "} (first on line " +
                                 std::to_string(it->second) + ")");
    }
    edges_.push_back(e);
  }

  void check_range(std::size_t n) const {
    for (const auto& [e, line] : seen_) {
      if (e.v >= n) {
        throw ParseError(line, "vertex " + std::to_string(e.v) +
                                   " out of range for n=" + std::to_string(n));
      }
    }
  }

  std::vector<Edge> take() { return std::move(edges_); }
  std::size_t max_vertex_plus_one() const {
    std::size_t n = 0;
    for (const Edge& e : edges_) n = std::max<std::size_t>(n, e.v + 1);
    return n;
  }
  std::size_t size() const { return edges_.size(); }

 private:
  std::map<Edge, std::size_t> seen_;
  std::vector<Edge> edges_;
};

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    fn(line, line_no);
  }
}

Graph parse_edge_list(std::string_view text) {
  EdgeCollector edges;
  for_each_line(text, [&](std::string_view line, std::size_t no) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto fields = split_fields(line);
    if (fields.empty()) return;
    if (fields.size() != 2) {
      throw ParseError(no, "expected 'u v', got " +
                               std::to_string(fields.size()) + " fields");
    }
    edges.add(parse_index(fields[0], no), parse_index(fields[1], no), no);
  });
  const std::size_t n = edges.max_vertex_plus_one();
  return Graph(n, edges.take());
}

Graph parse_dimacs(std::string_view text) {
  EdgeCollector edges;
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::size_t header_line = 0;
  for_each_line(text, [&](std::string_view line, std::size_t no) {
    const auto fields = split_fields(line);
    if (fields.empty() || fields[0] == "c") return;
    if (fields[0] == "p") {
      if (n) throw ParseError(no, "repeated 'p' header");
      if (fields.size() != 4 || (fields[1] != "edge" && fields[1] != "col")) {
        throw ParseError(no, "expected 'p edge n m'");
      }
      n = parse_index(fields[2], no);
      declared_m = parse_index(fields[3], no);
      header_line = no;
      return;
    }
    if (fields[0] == "e") {
      if (!n) throw ParseError(no, "edge before 'p edge' header");
      if (fields.size() != 3) throw ParseError(no, "expected 'e u v'");
      const auto a = parse_index(fields[1], no);
      const auto b = parse_index(fields[2], no);
      if (a == 0 || b == 0 || a > *n || b > *n) {
        throw ParseError(no, "vertex index out of range 1.." +
                                 std::to_string(*n));
      }
      edges.add(a - 1, b - 1, no);
      return;
    }
    throw ParseError(no, "unknown record '" + std::string(fields[0]) + "'");
  });
  if (!n) throw ParseError(0, "missing 'p edge n m' header");
  if (edges.size() != declared_m) {
    throw ParseError(header_line, "header declares " +
                                      std::to_string(declared_m) +
                                      " edges, found " +
                                      std::to_string(edges.size()));
  }
  return Graph(*n, edges.take());
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ParseError(0, "graph object needs \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_unsigned()) {
    throw ParseError(0, "\"n\" must be a non-negative integer");
  }
  const auto n = j["n"].get<std::size_t>();
  if (!j["edges"].is_array()) throw ParseError(0, "\"edges\" must be an array");
  EdgeCollector edges;
  std::size_t index = 0;
  for (const auto& pair : j["edges"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned()) {
      throw ParseError(0, "edges[" + std::to_string(index) +
                              "] must be a pair of non-negative integers");
    }
    const auto a = pair[0].get<std::uint64_t>();
    const auto b = pair[1].get<std::uint64_t>();
    if (a >= n || b >= n) {
      throw ParseError(0, "edges[" + std::to_string(index) +
                              "] out of range for n=" + std::to_string(n));
    }
    try {
      edges.add(a, b, 0);
    } catch (const ParseError& e) {
      throw ParseError(0, "edges[" + std::to_string(index) + "]: " + e.what());
    }
    ++index;
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) {
      throw ParseError(0, "\"labels\" must be an array of strings");
    }
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) {
        throw ParseError(0, "\"labels\" must be an array of strings");
      }
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != n) {
      throw ParseError(0, "\"labels\" must have n entries");
    }
  }
  return Graph(n, edges.take(), std::move(labels));
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList:
      return parse_edge_list(text);
    case GraphFormat::kDimacs:
      return parse_dimacs(text);
    case GraphFormat::kJson: {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line_of_offset(text, e.byte), "invalid JSON");
      }
      return graph_from_json(j);
    }
  }
  throw InvalidInput("unknown graph format");
}

GraphFormat detect_graph_format(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return GraphFormat::kEdgeList;
  if (text[first] == '{') return GraphFormat::kJson;
  if (text[first] == 'p' || text[first] == 'c') return GraphFormat::kDimacs;
  return GraphFormat::kEdgeList;
}

}  // namespace gradation
