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

#include "gradation/greyscale.hpp"

#include <algorithm>
#include <functional>

#include "gradation/error.hpp"

namespace gradation {

GradationVector GradationVector::from_edge_tones(std::vector<Tone> tones) {
  std::sort(tones.begin(), tones.end(), std::greater<>());
  GradationVector v;
  v.components_ = std::move(tones);
  return v;
}

GradationVector GradationVector::from_sorted(std::vector<Tone> tones) {
  if (!std::is_sorted(tones.begin(), tones.end(), std::greater<>())) {
    throw InvalidInput("gradation vector components must be non-increasing");
  }
  GradationVector v;
  v.components_ = std::move(tones);
  return v;
}

Tone edge_tone(const Greyscale& f, const Edge& e) {
  return abs_diff(f[e.u], f[e.v]);
}

GradationVector gradation_vector(const Graph& g, const Greyscale& f) {
  std::vector<Tone> tones;
  tones.reserve(g.edge_count());
  for (const Edge& e : g.edges()) tones.push_back(edge_tone(f, e));
  return GradationVector::from_edge_tones(std::move(tones));
}

std::vector<Tone> contrast_vector(const Graph& g, const Greyscale& f) {
  const GradationVector grad = gradation_vector(g, f);
  return {grad.components().rbegin(), grad.components().rend()};
}

LexOrder compare_lex(const GradationVector& a, const GradationVector& b) {
  if (a.size() != b.size()) {
    throw InvalidInput("cannot compare gradation vectors of lengths " +
                       std::to_string(a.size()) + " and " +
                       std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return LexOrder::kLess;
    if (b[i] < a[i]) return LexOrder::kGreater;
  }
  return LexOrder::kEqual;
}

Greyscale complement(const Greyscale& f) {
  std::vector<Tone> tones;
  tones.reserve(f.size());
  for (const Tone& t : f.tones()) tones.push_back(t.complement());
  return Greyscale(std::move(tones));
}

Validity is_valid_greyscale(const Graph& g, const Greyscale& f) {
  if (f.size() != g.vertex_count()) {
    return {false, "greyscale has " + std::to_string(f.size()) +
                       " tones for " + std::to_string(g.vertex_count()) +
                       " vertices"};
  }
  const auto tones = f.tones();
  const bool has_zero =
      std::any_of(tones.begin(), tones.end(), [](const Tone& t) { return t.is_zero(); });
  const bool has_one =
      std::any_of(tones.begin(), tones.end(), [](const Tone& t) { return t.is_one(); });
  if (!has_zero) return {false, "tone 0 not attained"};
  if (!has_one) return {false, "tone 1 not attained"};
  return {true, ""};
}

bool is_compatible(const Greyscale& f, const IncompleteGreyscale& fixed) {
  return std::all_of(fixed.begin(), fixed.end(), [&](const auto& entry) {
    return entry.first < f.size() && f[entry.first] == entry.second;
  });
}

Greyscale support_greyscale(const Graph& g, const DistanceMatrix& d, Vertex u,
                            Vertex v) {
  const auto diam = diameter_and_antipodal_pairs(g, d).length;
  if (u == v || d.hops(u, v) != diam) {
    throw InvalidInput("support greyscale needs an antipodal pair; d(" +
                       std::to_string(u) + "," + std::to_string(v) +
                       ") != " + std::to_string(diam));
  }
  std::vector<Tone> tones;
  tones.reserve(g.vertex_count());
  const auto denom = static_cast<std::int64_t>(2 * diam);
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    const auto num = static_cast<std::int64_t>(d.hops(w, u)) -
                     static_cast<std::int64_t>(d.hops(w, v)) +
                     static_cast<std::int64_t>(diam);
    tones.emplace_back(num, denom);
  }
  return Greyscale(std::move(tones));
}

Tone edge_colour_increase(const Greyscale& f, const DistanceMatrix& d,
                          Vertex u, Vertex v) {
  const std::size_t hops = d.hops(u, v);
  if (hops == 0) return Tone::zero();
  return Tone::from_rational(abs(mpq_class(f[u].value() - f[v].value())) /
                             mpq_class(static_cast<unsigned long>(hops)));
}

std::string format_run_length(const GradationVector& v) {
  std::string out;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (!out.empty()) out += ", ";
    out += v[i].str() + " ×" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace gradation
