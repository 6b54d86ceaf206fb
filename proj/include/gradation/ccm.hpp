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
#include <optional>
#include <vector>

#include "gradation/graph.hpp"
#include "gradation/greyscale.hpp"
#include "gradation/tone.hpp"

namespace gradation {

struct ColouredVertex {
  Vertex vertex = 0;
  Tone tone;
  friend bool operator==(const ColouredVertex&, const ColouredVertex&) = default;
};

struct SaturatedEdge {
  Edge edge;
  Tone tone;
  friend bool operator==(const SaturatedEdge&, const SaturatedEdge&) = default;
};

// One pass of the completion loop.
struct CcmIteration {
  std::size_t index = 0;                // 1-based
  Tone max_increase;                    // M_i
  std::vector<Edge> maximizing_pairs;   // S_i
  std::vector<ColouredVertex> coloured; // the saturating set A with tones
  std::vector<SaturatedEdge> saturated; // edges deleted after this pass
  std::size_t components_before = 0;    // components of G_i
  friend bool operator==(const CcmIteration&, const CcmIteration&) = default;
};

// A component of the final G_i whose uncoloured vertices take the tone of
// its anchor.
struct FloodFill {
  Vertex anchor = 0;
  std::vector<Vertex> component;
  friend bool operator==(const FloodFill&, const FloodFill&) = default;
};

struct CcmTrace {
  std::vector<CcmIteration> iterations;
  std::optional<std::vector<FloodFill>> flood_fill;
  friend bool operator==(const CcmTrace&, const CcmTrace&) = default;
};

// Trace of the same run on the complementary prefixed tones.
CcmTrace complement(const CcmTrace& trace);

struct CcmResult {
  Greyscale mapping;
  CcmTrace trace;
};

// Incremental form of the completion procedure: each step() performs one
// iteration of the while-loop, so several runs can advance in lockstep.
//
// Each step computes M = max F(a,b) over coloured pairs sharing a component
// of the current graph, colours every vertex on the geodesics of the
// maximizing pairs, and deletes the edges inside the coloured set. When no
// component holds two coloured vertices, or M = 0, every component is
// filled with the tone of its coloured vertices and the run ends.
//
// Steps continue after the last vertex is coloured until no edge is left,
// so that every edge is saturated by some iteration or flood-filled. Tones
// never change once set (a conflicting reassignment throws), so the extra
// iterations only complete the trace.
class CcmRun {
 public:
  // Throws DisconnectedGraph or InvalidInput (empty or out-of-range prefix).
  CcmRun(const Graph& g, const IncompleteGreyscale& fixed);

  bool done() const noexcept { return finished_; }
  void step();
  void run_to_completion() {
    while (!done()) step();
  }

  // Tones certain to head the final gradation vector, in decreasing order.
  // Once done() this is the whole vector.
  std::vector<Tone> settled() const;
  // Every final edge tone outside settled() is strictly below this bound.
  // Empty once done().
  std::optional<Tone> ceiling() const;

  const CcmTrace& trace() const noexcept { return trace_; }
  // Requires done().
  CcmResult result() const;

 private:
  void assign(Vertex w, const Tone& tone);
  void flood_fill(const std::vector<std::vector<Vertex>>& components);

  Graph original_;
  Graph current_;
  std::vector<std::optional<Tone>> tones_;
  std::size_t uncoloured_ = 0;
  bool finished_ = false;
  std::vector<Tone> saturated_tones_;
  CcmTrace trace_;
};

// Runs the completion procedure to the end.
CcmResult ccm(const Graph& g, const IncompleteGreyscale& fixed);

}  // namespace gradation
