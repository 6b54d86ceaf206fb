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

#include "gradation/ccm.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "gradation/error.hpp"

namespace gradation {

CcmTrace complement(const CcmTrace& trace) {
  CcmTrace out = trace;
  for (auto& it : out.iterations) {
    for (auto& c : it.coloured) c.tone = c.tone.complement();
  }
  return out;
}

CcmRun::CcmRun(const Graph& g, const IncompleteGreyscale& fixed)
    : original_(g), current_(g), tones_(g.vertex_count()) {
  if (!is_connected(g)) {
    throw DisconnectedGraph("completion requires a connected graph");
  }
  if (fixed.empty()) throw InvalidInput("no prefixed tones");
  for (const auto& [v, tone] : fixed) {
    if (v >= g.vertex_count()) {
      throw InvalidInput("prefixed vertex " + std::to_string(v) +
                         " out of range");
    }
    tones_[v] = tone;
  }
  uncoloured_ = g.vertex_count() - fixed.size();
  finished_ = uncoloured_ == 0 && g.edge_count() == 0;
}

void CcmRun::assign(Vertex w, const Tone& tone) {
  if (tones_[w]) {
    if (*tones_[w] != tone) {
      throw InvariantViolation(
          "vertex " + std::to_string(w) + " coloured " + tones_[w]->str() +
          " and " + tone.str() + " in iteration " +
          std::to_string(trace_.iterations.size() + 1));
    }
    return;
  }
  tones_[w] = tone;
  --uncoloured_;
}

void CcmRun::step() {
  if (done()) return;

  const DistanceMatrix d = all_pairs_distances_serial(current_);
  // Vertices left isolated by earlier deletions are no longer part of G_i.
  std::vector<std::vector<Vertex>> components;
  for (auto& comp : connected_components(current_)) {
    if (current_.degree(comp.front()) > 0 || trace_.iterations.empty()) {
      components.push_back(std::move(comp));
    }
  }

  std::optional<mpq_class> best;
  std::vector<Edge> pairs;
  for (const auto& comp : components) {
    std::vector<Vertex> coloured;
    for (Vertex w : comp) {
      if (tones_[w]) coloured.push_back(w);
    }
    for (std::size_t i = 0; i < coloured.size(); ++i) {
      for (std::size_t j = i + 1; j < coloured.size(); ++j) {
        const Vertex a = coloured[i];
        const Vertex b = coloured[j];
        mpq_class increase =
            abs(mpq_class(tones_[a]->value() - tones_[b]->value())) /
            mpq_class(static_cast<unsigned long>(d.hops(a, b)));
        const int c = best ? cmp(increase, *best) : 1;
        if (c > 0) {
          best = std::move(increase);
          pairs.clear();
        }
        if (c >= 0) pairs.emplace_back(a, b);
      }
    }
  }

  if (pairs.empty() || sgn(*best) == 0) {
    flood_fill(components);
    return;
  }

  const Tone max_increase = Tone::from_rational(*best);
  if (!trace_.iterations.empty() &&
      max_increase >= trace_.iterations.back().max_increase) {
    throw InvariantViolation("maximum increase " + max_increase.str() +
                             " did not decrease below " +
                             trace_.iterations.back().max_increase.str());
  }

  std::sort(pairs.begin(), pairs.end());
  std::vector<bool> in_a(tones_.size(), false);
  for (const Edge& p : pairs) {
    const Vertex low = *tones_[p.u] <= *tones_[p.v] ? p.u : p.v;
    const mpq_class base = tones_[low]->value();
    for (Vertex w : geodesic_interval(d, p.u, p.v)) {
      const mpq_class steps(static_cast<unsigned long>(d.hops(w, low)));
      assign(w, Tone::from_rational(base + steps * max_increase.value()));
      in_a[w] = true;
    }
  }

  CcmIteration record;
  record.index = trace_.iterations.size() + 1;
  record.max_increase = max_increase;
  record.maximizing_pairs = std::move(pairs);
  record.components_before = components.size();
  std::vector<Vertex> a_set;
  for (Vertex w = 0; w < in_a.size(); ++w) {
    if (in_a[w]) {
      a_set.push_back(w);
      record.coloured.push_back({w, *tones_[w]});
    }
  }
  for (const Edge& e : current_.edges()) {
    if (in_a[e.u] && in_a[e.v]) {
      Tone t = abs_diff(*tones_[e.u], *tones_[e.v]);
      saturated_tones_.push_back(t);
      record.saturated.push_back({e, std::move(t)});
    }
  }
  current_ = delete_saturated_edges(current_, a_set).graph;
  trace_.iterations.push_back(std::move(record));
  finished_ = uncoloured_ == 0 && current_.edge_count() == 0;
}

void CcmRun::flood_fill(const std::vector<std::vector<Vertex>>& components) {
  std::vector<FloodFill> fills;
  for (const auto& comp : components) {
    std::optional<Vertex> anchor;
    for (Vertex w : comp) {
      if (!tones_[w]) continue;
      if (!anchor) {
        anchor = w;
      } else if (*tones_[w] != *tones_[*anchor]) {
        throw InvariantViolation("component of vertex " +
                                 std::to_string(comp.front()) +
                                 " holds differently coloured vertices at "
                                 "flood fill");
      }
    }
    if (!anchor) {
      throw InvariantViolation("component of vertex " +
                               std::to_string(comp.front()) +
                               " has no coloured vertex at flood fill");
    }
    const Tone tone = *tones_[*anchor];
    for (Vertex w : comp) assign(w, tone);
    fills.push_back({*anchor, comp});
  }
  if (uncoloured_ != 0) {
    throw InvariantViolation("flood fill left " + std::to_string(uncoloured_) +
                             " vertices uncoloured");
  }
  trace_.flood_fill = std::move(fills);
  finished_ = true;
}

std::vector<Tone> CcmRun::settled() const {
  if (done()) {
    std::vector<Tone> all;
    all.reserve(original_.edge_count());
    for (const Edge& e : original_.edges()) {
      all.push_back(abs_diff(*tones_[e.u], *tones_[e.v]));
    }
    std::sort(all.begin(), all.end(), std::greater<>());
    return all;
  }
  if (trace_.iterations.empty()) return {};
  const Tone& bound = trace_.iterations.back().max_increase;
  std::vector<Tone> head;
  for (const Tone& t : saturated_tones_) {
    if (t >= bound) head.push_back(t);
  }
  std::sort(head.begin(), head.end(), std::greater<>());
  return head;
}

std::optional<Tone> CcmRun::ceiling() const {
  if (done() || trace_.iterations.empty()) return std::nullopt;
  return trace_.iterations.back().max_increase;
}

CcmResult CcmRun::result() const {
  if (!done()) throw InvariantViolation("completion run has not finished");
  std::vector<Tone> tones;
  tones.reserve(tones_.size());
  for (const auto& t : tones_) tones.push_back(*t);
  return {Greyscale(std::move(tones)), trace_};
}

CcmResult ccm(const Graph& g, const IncompleteGreyscale& fixed) {
  CcmRun run(g, fixed);
  run.run_to_completion();
  return run.result();
}

}  // namespace gradation
