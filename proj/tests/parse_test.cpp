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

#include <gtest/gtest.h>

#include "gradation/error.hpp"
#include "gradation/generators.hpp"
#include "gradation/parse.hpp"

namespace gradation {
namespace {

std::size_t error_line(std::string_view text, GraphFormat format) {
  try {
    parse_graph(text, format);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return 0;
}

TEST(ParseEdgeList, Path) {
  EXPECT_EQ(parse_graph("0 1\n1 2", GraphFormat::kEdgeList), path_graph(3));
}

TEST(ParseEdgeList, CommentsAndBlankLines) {
  Graph g = parse_graph("# header\n\n0 1 # trailing\n\t1  2\r\n",
                        GraphFormat::kEdgeList);
  EXPECT_EQ(g, path_graph(3));
}

TEST(ParseEdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("0 1\n0 1", GraphFormat::kEdgeList), 2u);
  EXPECT_EQ(error_line("0 1\n1 0", GraphFormat::kEdgeList), 2u);
  EXPECT_EQ(error_line("0 1\n\n2 2", GraphFormat::kEdgeList), 3u);
  EXPECT_EQ(error_line("0 1 2", GraphFormat::kEdgeList), 1u);
  EXPECT_EQ(error_line("0 x", GraphFormat::kEdgeList), 1u);
  EXPECT_EQ(error_line("0 -1", GraphFormat::kEdgeList), 1u);
}

TEST(ParseDimacs, OneBasedPath) {
  Graph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3", GraphFormat::kDimacs);
  EXPECT_EQ(g, path_graph(3));
  Graph h = parse_graph("c comment\np col 3 2\ne 1 2\ne 3 2\n",
                        GraphFormat::kDimacs);
  EXPECT_EQ(h, path_graph(3));
}

TEST(ParseDimacs, KeepsIsolatedDeclaredVertices) {
  Graph g = parse_graph("p edge 4 1\ne 1 2", GraphFormat::kDimacs);
  EXPECT_EQ(g.vertex_count(), 4u);
}

TEST(ParseDimacs, Errors) {
  EXPECT_EQ(error_line("p edge 3 1\ne 1 4", GraphFormat::kDimacs), 2u);
  EXPECT_EQ(error_line("p edge 3 1\ne 0 1", GraphFormat::kDimacs), 2u);
  EXPECT_EQ(error_line("p edge 3 2\ne 1 2\ne 2 1", GraphFormat::kDimacs), 3u);
  EXPECT_EQ(error_line("p edge 3 1\ne 2 2", GraphFormat::kDimacs), 2u);
  EXPECT_EQ(error_line("e 1 2", GraphFormat::kDimacs), 1u);
  EXPECT_EQ(error_line("p edge 3 2\ne 1 2", GraphFormat::kDimacs), 1u);
  EXPECT_EQ(error_line("p edge 3 1\nx 1 2", GraphFormat::kDimacs), 2u);
  EXPECT_THROW(parse_graph("c nothing", GraphFormat::kDimacs), ParseError);
}

TEST(ParseJson, GraphObject) {
  Graph g = parse_graph(R"({"n": 3, "edges": [[0, 1], [1, 2]]})",
                        GraphFormat::kJson);
  EXPECT_EQ(g, path_graph(3));
  EXPECT_THROW(parse_graph(R"({"n": 2, "edges": [[0, 2]]})", GraphFormat::kJson),
               InvalidInput);
  EXPECT_THROW(parse_graph(R"({"n": 2, "edges": [[0, 1], [1, 0]]})",
                           GraphFormat::kJson),
               InvalidInput);
  EXPECT_THROW(parse_graph("{", GraphFormat::kJson), InvalidInput);
}

TEST(DetectFormat, ByContent) {
  EXPECT_EQ(detect_graph_format("0 1\n"), GraphFormat::kEdgeList);
  EXPECT_EQ(detect_graph_format("  {\"n\": 1}"), GraphFormat::kJson);
  EXPECT_EQ(detect_graph_format("c hi\np edge 2 1\ne 1 2"), GraphFormat::kDimacs);
}

}  // namespace
}  // namespace gradation
