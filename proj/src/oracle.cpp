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

#include "gradation/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include <omp.h>

namespace gradation {
namespace {

using Grid = std::int64_t;
using GridVector = std::vector<Grid>;  // decreasing

Grid grid_abs(Grid x) { return x < 0 ? -x : x; }

// a padded with zeros, compared against the full-length b.
bool padded_less(const GridVector& a, const GridVector& b) {
  for (std::size_t j = 0; j < b.size(); ++j) {
    const Grid x = j < a.size() ? a[j] : 0;
    if (x != b[j]) return x < b[j];
  }
  return false;
}

GridVector merged(const GridVector& sorted, GridVector extra) {
  std::sort(extra.begin(), extra.end(), std::greater<>());
  GridVector out(sorted.size() + extra.size());
  std::merge(sorted.begin(), sorted.end(), extra.begin(), extra.end(),
             out.begin(), std::greater<>());
  return out;
}

class GridSearch {
 public:
  GridSearch(const Graph& g, std::vector<std::optional<Grid>> assigned,
             Grid L)
      : L_(L), value_(std::move(assigned)) {
    std::vector<bool> placed(value_.size());
    for (std::size_t v = 0; v < value_.size(); ++v) placed[v] = value_[v].has_value();
    GridVector initial;
    for (const Edge& e : g.edges()) {
      if (placed[e.u] && placed[e.v]) initial.push_back(grid_abs(*value_[e.u] - *value_[e.v]));
    }
    // Free vertices in an order that fixes as many edge tones as early as
    // possible: always the one with most already-placed neighbours.
    while (true) {
      std::optional<Vertex> pick;
      std::size_t pick_links = 0;
      for (Vertex v = 0; v < value_.size(); ++v) {
        if (placed[v]) continue;
        std::size_t links = 0;
        for (Vertex w : g.neighbours(v)) links += placed[w] ? 1 : 0;
        if (!pick || links > pick_links) {
          pick = v;
          pick_links = links;
        }
      }
      if (!pick) break;
      std::vector<Vertex> back;
      for (Vertex w : g.neighbours(*pick)) {
        if (placed[w]) back.push_back(w);
      }
      order_.push_back(*pick);
      back_.push_back(std::move(back));
      placed[*pick] = true;
    }
    known_.resize(order_.size() + 1);
    std::sort(initial.begin(), initial.end(), std::greater<>());
    known_[0] = std::move(initial);
  }

  // Improves `best` in place; returns whether it changed.
  bool run(std::optional<GridVector>& best) {
    best_ = &best;
    improved_ = false;
    if (!best || padded_less(known_[0], *best)) dfs(0);
    return improved_;
  }

 private:
  void dfs(std::size_t depth) {
    if (depth == order_.size()) {
      if (!*best_ || known_[depth] < **best_) {
        *best_ = known_[depth];
        improved_ = true;
      }
      return;
    }
    const auto& back = back_[depth];

    Grid centre = L_ / 2;
    if (!back.empty()) {
      Grid sum = 0;
      for (Vertex w : back) sum += *value_[w];
      centre = sum / static_cast<Grid>(back.size());
    }
    // Outward from the neighbours' mean: smooth assignments come first and
    // tighten the incumbent early.
    for (Grid offset = 0; offset <= L_; ++offset) {
      if (*best_ && !back.empty()) {
        // Past this offset some neighbour edge exceeds the incumbent's top.
        Grid nearest = L_;
        for (Vertex w : back) nearest = std::min(nearest, grid_abs(centre - *value_[w]));
        if (offset > nearest + (**best_)[0]) break;
      }
      const Grid below = centre - offset;
      const Grid above = centre + offset;
      if (below < 0 && above > L_) break;
      if (below >= 0) try_value(depth, below);
      if (offset > 0 && above <= L_) try_value(depth, above);
    }
  }

  void try_value(std::size_t depth, Grid t) {
    const auto& back = back_[depth];
    const Grid bound = *best_ ? (**best_)[0] : L_;
    GridVector tones;
    tones.reserve(back.size());
    for (Vertex w : back) {
      const Grid tone = grid_abs(t - *value_[w]);
      if (tone > bound) return;
      tones.push_back(tone);
    }
    known_[depth + 1] = merged(known_[depth], std::move(tones));
    if (*best_ && !padded_less(known_[depth + 1], **best_)) return;
    value_[order_[depth]] = t;
    dfs(depth + 1);
    value_[order_[depth]].reset();
  }

  Grid L_;
  std::vector<std::optional<Grid>> value_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> back_;
  std::vector<GridVector> known_;
  std::optional<GridVector>* best_ = nullptr;
  bool improved_ = false;
};

Grid to_grid(const Tone& t, Grid L) {
  const mpq_class scaled = t.value() * mpq_class(static_cast<long>(L));
  if (cmp(scaled.get_den(), 1) != 0) {
    throw InvalidInput("prefixed tone " + t.str() + " is not on the 1/" +
                       std::to_string(L) + " grid");
  }
  return scaled.get_num().get_si();
}

}  // namespace

bool on_grid(const Greyscale& f, std::int64_t grid_denominator) {
  const mpq_class L(static_cast<long>(grid_denominator));
  return std::all_of(f.tones().begin(), f.tones().end(), [&](const Tone& t) {
    const mpq_class scaled = t.value() * L;
    return cmp(scaled.get_den(), 1) == 0;
  });
}

GradationVector brute_force_min_gradation(const Graph& g,
                                          const IncompleteGreyscale& fixed,
                                          std::int64_t grid_denominator,
                                          const OracleOptions& options) {
  const Grid L = grid_denominator;
  const std::size_t n = g.vertex_count();
  if (L < 1) throw InvalidInput("grid denominator must be positive");
  if (n < 2) throw InvalidInput("a greyscale needs at least two vertices");
  if (!is_connected(g)) {
    throw DisconnectedGraph("oracle requires a connected graph");
  }

  std::vector<std::optional<Grid>> base(n);
  bool has_zero = false;
  bool has_one = false;
  for (const auto& [v, tone] : fixed) {
    if (v >= n) throw InvalidInput("prefixed vertex out of range");
    base[v] = to_grid(tone, L);
    has_zero = has_zero || *base[v] == 0;
    has_one = has_one || *base[v] == L;
  }
  std::vector<Vertex> free;
  for (Vertex v = 0; v < n; ++v) {
    if (!base[v]) free.push_back(v);
  }

  // Every feasible greyscale has some 0 vertex and some 1 vertex; the
  // placements below cover each such choice.
  std::vector<std::vector<std::optional<Grid>>> placements;
  auto with = [&](std::initializer_list<std::pair<Vertex, Grid>> extra) {
    auto p = base;
    for (auto [v, t] : extra) p[v] = t;
    placements.push_back(std::move(p));
  };
  if (fixed.empty()) {
    // Complements share vectors, so 0 goes on the smaller endpoint.
    for (std::size_t i = 0; i < free.size(); ++i) {
      for (std::size_t j = i + 1; j < free.size(); ++j) {
        with({{free[i], 0}, {free[j], L}});
      }
    }
  } else if (has_zero && has_one) {
    with({});
  } else if (has_zero || has_one) {
    for (Vertex w : free) with({{w, has_zero ? L : 0}});
  } else {
    for (Vertex a : free) {
      for (Vertex b : free) {
        if (a != b) with({{a, 0}, {b, L}});
      }
    }
  }
  if (placements.empty()) {
    throw InvalidInput("no greyscale is compatible with the prefixed tones");
  }

  const auto placed = static_cast<std::size_t>(
      std::count_if(placements.front().begin(), placements.front().end(),
                    [](const auto& t) { return t.has_value(); }));
  const std::size_t searched = n - placed;
  if (searched > options.max_free &&
      std::pow(static_cast<double>(L + 1), static_cast<double>(searched)) >
          options.budget) {
    throw OracleBudgetExceeded("oracle budget exceeded: " +
                               std::to_string(searched) +
                               " free vertices on a 1/" + std::to_string(L) +
                               " grid");
  }

  std::optional<GridVector> best;
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  if (threads == 1) {
    for (auto& p : placements) GridSearch(g, p, L).run(best);
  } else {
    const auto count = static_cast<std::int64_t>(placements.size());
    std::vector<std::optional<GridVector>> partial(placements.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
      GridSearch(g, placements[i], L).run(partial[i]);
    }
    for (auto& p : partial) {
      if (p && (!best || *p < *best)) best = std::move(p);
    }
  }

  std::vector<Tone> tones;
  tones.reserve(best->size());
  for (Grid t : *best) tones.emplace_back(t, L);
  return GradationVector::from_sorted(std::move(tones));
}

}  // namespace gradation
