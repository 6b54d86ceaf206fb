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

#include "gradation/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gradation/error.hpp"

namespace gradation {

Graph::Graph(std::size_t n, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : edges_(std::move(edges)), adjacency_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n) {
    throw InvalidInput("label count " + std::to_string(labels_.size()) +
                       " does not match vertex count " + std::to_string(n));
  }
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw InvalidInput("edge {" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + "} out of range for n=" +
                         std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw InvalidInput("duplicate edge {" + std::to_string(dup->u) + "," +
                       std::to_string(dup->v) + "}");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

DistanceMatrix::DistanceMatrix(std::size_t n)
    : n_(n), cells_(n * n, kUnreachable) {}

std::optional<std::size_t> DistanceMatrix::at(Vertex u, Vertex v) const {
  const auto cell = cells_[index(u, v)];
  if (cell == kUnreachable) return std::nullopt;
  return cell;
}

std::size_t DistanceMatrix::hops(Vertex u, Vertex v) const {
  const auto cell = cells_[index(u, v)];
  if (cell == kUnreachable) throw UnreachablePair(u, v);
  return cell;
}

void DistanceMatrix::set(Vertex u, Vertex v, std::size_t hops) {
  cells_[index(u, v)] = static_cast<std::uint32_t>(hops);
}

namespace {

void bfs_row(const Graph& g, Vertex source, DistanceMatrix& d,
             std::vector<Vertex>& queue) {
  queue.clear();
  queue.push_back(source);
  d.set(source, source, 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const std::size_t next = d.hops(source, x) + 1;
    for (Vertex y : g.neighbours(x)) {
      if (!d.reachable(source, y)) {
        d.set(source, y, next);
        queue.push_back(y);
      }
    }
  }
}

}  // namespace

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) bfs_row(g, s, d, queue);
  return d;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  // Each source writes only its own row.
#pragma omp parallel
  {
    std::vector<Vertex> queue;
    queue.reserve(n);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      bfs_row(g, static_cast<Vertex>(s), d, queue);
    }
  }
  return d;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g,
                                                      Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbours(x)) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> components;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> members{s};
    seen[s] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex y : g.neighbours(members[head])) {
        if (!seen[y]) {
          seen[y] = true;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

Diameter diameter_and_antipodal_pairs(const Graph& g, const DistanceMatrix& d) {
  if (!is_connected(g)) {
    throw DisconnectedGraph("diameter is undefined for a disconnected graph");
  }
  Diameter result;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t h = d.hops(u, v);
      if (h > result.length) {
        result.length = h;
        result.antipodal_pairs.clear();
      }
      if (h == result.length) result.antipodal_pairs.emplace_back(u, v);
    }
  }
  return result;
}

std::vector<Vertex> geodesic_interval(const DistanceMatrix& d, Vertex u,
                                      Vertex v) {
  const std::size_t length = d.hops(u, v);
  std::vector<Vertex> interval;
  for (Vertex w = 0; w < d.size(); ++w) {
    const auto to_u = d.at(u, w);
    const auto to_v = d.at(w, v);
    if (to_u && to_v && *to_u + *to_v == length) interval.push_back(w);
  }
  return interval;
}

EdgeDeletion delete_saturated_edges(const Graph& g,
                                    std::span<const Vertex> saturated) {
  std::vector<bool> in_set(g.vertex_count(), false);
  for (Vertex w : saturated) in_set[w] = true;

  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (!(in_set[e.u] && in_set[e.v])) kept.push_back(e);
  }
  EdgeDeletion result{Graph(g.vertex_count(), std::move(kept), g.labels()),
                      {}};
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (g.degree(w) > 0 && result.graph.degree(w) == 0) {
      result.removed.push_back(w);
    }
  }
  return result;
}

}  // namespace gradation
