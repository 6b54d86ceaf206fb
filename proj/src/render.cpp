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

#include "gradation/render.hpp"

#include <cstdio>

#include "gradation/error.hpp"

namespace gradation {
namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string grey_fill(const Tone& tone) {
  // floor(x + 1/2) is half-away-from-zero for the non-negative x here.
  const mpq_class level = mpq_class(255) * (1 - tone.value()) + mpq_class(1, 2);
  const mpz_class rounded = level.get_num() / level.get_den();
  const unsigned long channel = rounded.get_ui();
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02lx%02lx%02lx", channel, channel, channel);
  return buf;
}

std::string render_dot(const Graph& g, const Greyscale& f,
                       std::string_view name) {
  if (f.size() != g.vertex_count()) {
    throw InvalidInput("greyscale does not match the graph");
  }
  std::string out = "graph " + quoted(name) + " {\n";
  out += "  node [style=filled, shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::string fill = grey_fill(f[v]);
    out += "  " + std::to_string(v) + " [label=" +
           quoted(g.label(v) + "\\n" + f[v].str()) + ", fillcolor=\"" + fill +
           "\"";
    if (fill == "#000000") out += ", fontcolor=\"#ffffff\"";
    out += "];\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) +
           " [label=\"" + edge_tone(f, e).str() + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace gradation
