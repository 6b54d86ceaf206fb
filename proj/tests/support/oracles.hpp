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

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <vector>

#include "gradation/graph.hpp"
#include "gradation/greyscale.hpp"

namespace gradation {

// Readable failure messages for the tone types.
inline void PrintTo(const Tone& t, std::ostream* os) { *os << t.str(); }

inline void print_tones(std::span<const Tone> tones, std::ostream* os) {
  *os << "(";
  for (std::size_t i = 0; i < tones.size(); ++i) *os << (i ? "," : "") << tones[i].str();
  *os << ")";
}
inline void PrintTo(const Greyscale& f, std::ostream* os) { print_tones(f.tones(), os); }
inline void PrintTo(const GradationVector& v, std::ostream* os) {
  print_tones(v.components(), os);
}

}  // namespace gradation

namespace gradation::testing {

using BoolMatrix = std::vector<std::vector<bool>>;

// Distances from boolean powers of the adjacency matrix: d(u,v) is the
// smallest k with (I + A)^k [u][v] set.
inline std::vector<std::vector<std::optional<std::size_t>>> matrix_power_distances(
    const Graph& g) {
  const std::size_t n = g.vertex_count();
  BoolMatrix adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  BoolMatrix reach(n, std::vector<bool>(n, false));
  std::vector<std::vector<std::optional<std::size_t>>> dist(
      n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = true;
    dist[i][i] = 0;
  }
  for (std::size_t k = 1; k < n; ++k) {
    BoolMatrix next = reach;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (next[i][j]) continue;
        for (std::size_t l = 0; l < n; ++l) {
          if (reach[i][l] && adj[l][j]) {
            next[i][j] = true;
            break;
          }
        }
        if (next[i][j]) dist[i][j] = k;
      }
    }
    reach = std::move(next);
  }
  return dist;
}

// Every simple u-v path, by depth-first search over the adjacency lists.
inline std::vector<std::vector<Vertex>> all_simple_paths(const Graph& g,
                                                         Vertex u, Vertex v) {
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> path{u};
  std::vector<bool> on_path(g.vertex_count(), false);
  on_path[u] = true;
  std::function<void(Vertex)> walk = [&](Vertex x) {
    if (x == v) {
      paths.push_back(path);
      return;
    }
    for (Vertex y : g.neighbours(x)) {
      if (on_path[y]) continue;
      on_path[y] = true;
      path.push_back(y);
      walk(y);
      path.pop_back();
      on_path[y] = false;
    }
  };
  walk(u);
  return paths;
}

// Vertices on at least one shortest u-v path, from explicit enumeration.
inline std::vector<Vertex> interval_by_enumeration(const Graph& g, Vertex u,
                                                   Vertex v) {
  const auto paths = all_simple_paths(g, u, v);
  std::size_t shortest = SIZE_MAX;
  for (const auto& p : paths) shortest = std::min(shortest, p.size());
  std::set<Vertex> members;
  for (const auto& p : paths) {
    if (p.size() == shortest) members.insert(p.begin(), p.end());
  }
  return {members.begin(), members.end()};
}

// One representative per isomorphism class of connected graphs on n
// vertices; the canonical key is the smallest edge bitmask over all vertex
// permutations.
inline std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::map<std::pair<Vertex, Vertex>, std::size_t> slot_of;
  for (std::size_t i = 0; i < slots.size(); ++i) slot_of[slots[i]] = i;

  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::uint64_t canonical = UINT64_MAX;
    for (const auto& p : perms) {
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        Vertex a = p[slots[i].first];
        Vertex b = p[slots[i].second];
        if (a > b) std::swap(a, b);
        image |= std::uint64_t{1} << slot_of[{a, b}];
      }
      canonical = std::min(canonical, image);
    }
    if (!seen.insert(canonical).second) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (canonical >> i & 1) edges.emplace_back(slots[i].first, slots[i].second);
    }
    Graph g(n, std::move(edges));
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

// Minimum gradation vector over every grid greyscale compatible with
// `fixed`, by plain enumeration of all (L+1)^n tone assignments.
inline GradationVector exhaustive_min_gradation(const Graph& g,
                                                const IncompleteGreyscale& fixed,
                                                std::int64_t L) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> k(n, 0);
  std::optional<GradationVector> best;
  while (true) {
    std::vector<Tone> t;
    for (std::size_t v = 0; v < n; ++v) t.emplace_back(k[v], L);
    Greyscale f(std::move(t));
    if (is_compatible(f, fixed) && is_valid_greyscale(g, f).valid) {
      GradationVector vec = gradation_vector(g, f);
      if (!best || compare_lex(vec, *best) == LexOrder::kLess) best = std::move(vec);
    }
    std::size_t i = 0;
    while (i < n && k[i] == L) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
  return *best;
}

// Relabels vertex v as perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.vertex_count(), std::move(edges));
}

inline Graph make_graph(std::size_t n,
                        std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Greyscale tones(std::initializer_list<const char*> text) {
  std::vector<Tone> out;
  for (const char* t : text) out.push_back(Tone::parse(t));
  return Greyscale(std::move(out));
}

inline GradationVector vec(std::initializer_list<const char*> text) {
  std::vector<Tone> out;
  for (const char* t : text) out.push_back(Tone::parse(t));
  return GradationVector::from_sorted(std::move(out));
}

}  // namespace gradation::testing
