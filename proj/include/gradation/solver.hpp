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
#include <span>
#include <vector>

#include "gradation/ccm.hpp"
#include "gradation/graph.hpp"
#include "gradation/greyscale.hpp"

namespace gradation {

// Extreme tones placed by a wrapper rather than prefixed by the caller.
struct Anchor {
  std::optional<Vertex> zero;
  std::optional<Vertex> one;
  friend bool operator==(const Anchor&, const Anchor&) = default;
};

struct Solution {
  Greyscale greyscale;
  GradationVector vector;
  CcmTrace trace;
  Anchor anchor;
  friend bool operator==(const Solution&, const Solution&) = default;
};

struct SolveStats {
  std::size_t candidates = 0;
  std::size_t pruned = 0;
  friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

// Every minimum-gradation greyscale, one per complementary pair, sorted by
// tone sequence.
struct SolutionSet {
  GradationVector vector;
  std::vector<Solution> solutions;
  SolveStats stats;
  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

struct SolveOptions {
  bool restrict_antipodal = true;
  bool prune = false;
  // 1 selects the serial reference path; 0 uses the OpenMP default.
  int jobs = 0;
};

enum class ProblemKind { kMigg, kBothExtremes, kOneExtreme, kNoExtreme };

// Which case a set of prefixed tones falls into; empty means MIGG.
ProblemKind classify(const IncompleteGreyscale& fixed);
const char* to_string(ProblemKind kind);

// Prefixed tones attain both 0 and 1: the completion is the unique optimum.
Solution rmigg_both_extremes(const Graph& g, const IncompleteGreyscale& fixed);

// Prefixed tones attain exactly one extreme: the other is tried on every
// free vertex.
SolutionSet rmigg_one_extreme(const Graph& g, const IncompleteGreyscale& fixed,
                              const SolveOptions& options = {});

// Prefixed tones attain neither extreme: every ordered pair of free vertices
// is tried as (0, 1).
SolutionSet rmigg_no_extreme(const Graph& g, const IncompleteGreyscale& fixed,
                             const SolveOptions& options = {});

// Unrestricted problem. Candidate extreme pairs are the antipodal pairs when
// options.restrict_antipodal is set, otherwise every vertex pair.
SolutionSet migg(const Graph& g, const SolveOptions& options = {});

// Dispatches on classify(fixed).
SolutionSet solve(const Graph& g, const IncompleteGreyscale& fixed,
                  const SolveOptions& options = {});

// Merges identical greyscales (first occurrence wins), keeps only the
// lexicographically smaller member of each complementary pair, and sorts.
std::vector<Solution> dedupe_complementary(std::vector<Solution> solutions);

// What a pruning round knows about an in-flight completion run.
struct PruneView {
  std::vector<Tone> settled;   // decreasing; leading final-vector components
  std::optional<Tone> ceiling; // all other final components are below it
};

// True when `a`'s final vector is certainly lexicographically smaller than
// `b`'s.
bool dominates(const PruneView& a, const PruneView& b);

// Indices of the views not dominated by any other view, ascending.
std::vector<std::size_t> prune_candidates(std::span<const PruneView> views);

}  // namespace gradation
