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

#include "gradation/generators.hpp"

#include "gradation/error.hpp"

namespace gradation {

Graph path_graph(std::size_t vertices) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < vertices; ++v) edges.emplace_back(v - 1, v);
  return Graph(vertices, std::move(edges));
}

Graph cycle_graph(std::size_t vertices) {
  if (vertices < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < vertices; ++v) {
    edges.emplace_back(v, static_cast<Vertex>((v + 1) % vertices));
  }
  return Graph(vertices, std::move(edges));
}

Graph complete_graph(std::size_t vertices) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < vertices; ++u) {
    for (Vertex v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
  }
  return Graph(vertices, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

Graph random_connected_graph(std::size_t vertices,
                             double extra_edge_probability,
                             std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> used(vertices,
                                      std::vector<bool>(vertices, false));
  for (Vertex v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    const Vertex p = parent(rng);
    edges.emplace_back(p, v);
    used[p][v] = used[v][p] = true;
  }
  std::bernoulli_distribution extra(extra_edge_probability);
  for (Vertex u = 0; u < vertices; ++u) {
    for (Vertex v = u + 1; v < vertices; ++v) {
      if (!used[u][v] && extra(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(vertices, std::move(edges));
}

Greyscale random_greyscale(std::size_t vertices, std::mt19937_64& rng,
                           int max_denominator) {
  if (vertices < 2) throw InvalidInput("a greyscale needs two vertices");
  std::uniform_int_distribution<int> denominator(1, max_denominator);
  std::vector<Tone> tones;
  tones.reserve(vertices);
  for (std::size_t v = 0; v < vertices; ++v) {
    const int q = denominator(rng);
    std::uniform_int_distribution<int> numerator(0, q);
    tones.emplace_back(numerator(rng), q);
  }
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  const std::size_t white = pick(rng);
  std::size_t black = pick(rng);
  while (black == white) black = pick(rng);
  tones[white] = Tone::zero();
  tones[black] = Tone::one();
  return Greyscale(std::move(tones));
}

}  // namespace gradation
