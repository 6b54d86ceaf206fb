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

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gradation/graph.hpp"
#include "gradation/tone.hpp"

namespace gradation {

// Total tone assignment indexed by vertex. Whether both extremes are
// attained is a separate question (see is_valid_greyscale): the completion
// procedure produces such mappings before they are known to be greyscales.
class Greyscale {
 public:
  Greyscale() = default;
  explicit Greyscale(std::vector<Tone> tones) : tones_(std::move(tones)) {}

  std::size_t size() const noexcept { return tones_.size(); }
  const Tone& operator[](Vertex v) const { return tones_[v]; }
  std::span<const Tone> tones() const noexcept { return tones_; }

  // Lexicographic order of the per-vertex tone sequence.
  friend auto operator<=>(const Greyscale&, const Greyscale&) = default;
  friend bool operator==(const Greyscale&, const Greyscale&) = default;

 private:
  std::vector<Tone> tones_;
};

// Prefixed tones on a vertex subset V_c.
using IncompleteGreyscale = std::map<Vertex, Tone>;

// Edge tones sorted in decreasing order.
class GradationVector {
 public:
  GradationVector() = default;

  static GradationVector from_edge_tones(std::vector<Tone> tones);
  // Throws InvalidInput unless `tones` is already non-increasing.
  static GradationVector from_sorted(std::vector<Tone> tones);

  std::size_t size() const noexcept { return components_.size(); }
  const Tone& operator[](std::size_t i) const { return components_[i]; }
  std::span<const Tone> components() const noexcept { return components_; }

  friend bool operator==(const GradationVector&,
                         const GradationVector&) = default;

 private:
  std::vector<Tone> components_;
};

enum class LexOrder { kLess, kEqual, kGreater };

Tone edge_tone(const Greyscale& f, const Edge& e);
GradationVector gradation_vector(const Graph& g, const Greyscale& f);
// Edge tones in ascending order.
std::vector<Tone> contrast_vector(const Graph& g, const Greyscale& f);

// kLess means `a` has the better (smaller) gradation. Throws InvalidInput on
// a length mismatch.
LexOrder compare_lex(const GradationVector& a, const GradationVector& b);

Greyscale complement(const Greyscale& f);

struct Validity {
  bool valid = false;
  std::string reason;  // empty when valid
};
Validity is_valid_greyscale(const Graph& g, const Greyscale& f);

bool is_compatible(const Greyscale& f, const IncompleteGreyscale& fixed);

// Distance-based greyscale for an antipodal pair:
//   w -> (d(w,u) - d(w,v) + diam) / (2 diam).
// Throws DisconnectedGraph or InvalidInput (non-antipodal pair).
Greyscale support_greyscale(const Graph& g, const DistanceMatrix& d, Vertex u,
                            Vertex v);

// |f(u) - f(v)| / d(u,v), and 0 for u == v. Throws UnreachablePair.
Tone edge_colour_increase(const Greyscale& f, const DistanceMatrix& d,
                          Vertex u, Vertex v);

// Run-length text such as "1/4 ×4, 0 ×2".
std::string format_run_length(const GradationVector& v);

}  // namespace gradation
