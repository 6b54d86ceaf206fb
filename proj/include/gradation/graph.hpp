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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gradation {

using Vertex = std::uint32_t;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph over the dense vertex range 0..n-1.
// Edges are kept sorted; adjacency lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidInput on self-loops, duplicates or out-of-range endpoints.
  Graph(std::size_t n, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const;

  // Empty when the graph carries no external labels.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.adjacency_.size() == b.adjacency_.size();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
};

// Hop distances between every pair of vertices. Pairs in different
// components have no distance; `at` returns nullopt for them and `hops`
// throws UnreachablePair.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::optional<std::size_t> at(Vertex u, Vertex v) const;
  std::size_t hops(Vertex u, Vertex v) const;
  bool reachable(Vertex u, Vertex v) const {
    return cells_[index(u, v)] != kUnreachable;
  }

  void set(Vertex u, Vertex v, std::size_t hops);

  friend bool operator==(const DistanceMatrix&,
                         const DistanceMatrix&) = default;

 private:
  static constexpr std::uint32_t kUnreachable = UINT32_MAX;
  std::size_t index(Vertex u, Vertex v) const { return u * n_ + v; }

  std::size_t n_ = 0;
  std::vector<std::uint32_t> cells_;
};

// One BFS per source vertex. The parallel variant distributes sources over
// OpenMP threads; both produce identical matrices.
DistanceMatrix all_pairs_distances(const Graph& g);
DistanceMatrix all_pairs_distances_serial(const Graph& g);

// Single-source BFS; entries for unreachable vertices are nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g,
                                                      Vertex source);

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct Diameter {
  std::size_t length = 0;
  std::vector<Edge> antipodal_pairs;  // unordered, sorted
};

// Throws DisconnectedGraph when `g` is not connected.
Diameter diameter_and_antipodal_pairs(const Graph& g, const DistanceMatrix& d);

// All vertices on some u-v geodesic, ascending.
std::vector<Vertex> geodesic_interval(const DistanceMatrix& d, Vertex u,
                                      Vertex v);

struct EdgeDeletion {
  Graph graph;
  std::vector<Vertex> removed;  // vertices left isolated by the deletion
};

// Drops every edge with both endpoints in `saturated`, then reports the
// vertices whose degree fell to zero. Vertex numbering is preserved.
EdgeDeletion delete_saturated_edges(const Graph& g,
                                    std::span<const Vertex> saturated);

}  // namespace gradation
