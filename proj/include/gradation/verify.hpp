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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gradation/ccm.hpp"
#include "gradation/graph.hpp"
#include "gradation/greyscale.hpp"
#include "gradation/solver.hpp"

namespace gradation {

struct Check {
  std::string name;
  bool pass = true;
  std::optional<std::string> witness;  // set on failure, skip or flag
  bool skipped = false;
  // Passed, but with an anomaly worth reporting.
  bool flagged = false;
  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool overall() const;
  void add(std::string name, bool pass, std::optional<std::string> witness = {});
  void append(const VerificationReport& other, const std::string& prefix = "");
  const Check* find(const std::string& name) const;
};

// Validity, compatibility, vector recomputation, strict decrease of the
// trace maxima, a replay of every traced colouring on the recorded G_i, and
// coverage: every vertex is prefixed, anchored or coloured by the trace, and
// every edge is saturated by some iteration or lies in a flood-filled
// component.
VerificationReport check_solution(const Graph& g,
                                  const IncompleteGreyscale& fixed,
                                  const Solution& s);

// Expected shape: every nonzero component is one of the traced maxima.
// A component above the largest maximum, or a nonzero component with no
// traced maximum at all, fails the check. Any other nonzero component that
// is not a traced maximum (an edge inside the coloured set that lies on no
// maximizing geodesic) is reported as flagged.
VerificationReport check_vector_shape(const CcmTrace& trace,
                                      const GradationVector& v);

// Every pair toned 0 and 1 lies at distance diam(G).
bool check_antipodal_extremes(const Graph& g, const Greyscale& f);

// The first diam(G) components equal 1/diam(G).
bool check_diameter_prefix(const Graph& g, const GradationVector& v);

// Every u-v geodesic as a vertex sequence from u to v; stops after `limit`.
std::vector<std::vector<Vertex>> enumerate_geodesics(
    const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v,
    std::size_t limit = 100000);

using IncreaseFn = std::function<Tone(const Greyscale&, const DistanceMatrix&,
                                      Vertex, Vertex)>;

struct LemmaSuiteOptions {
  // Replaced only by fault-injection tests.
  IncreaseFn increase = edge_colour_increase;
};

// Random rational greyscales (seeded) checked against the geodesic lemmas:
// the three-point inequality, the geodesic lower bound, equality along a
// geodesic, the maximizing-pair formulas for vertices and edges, complement
// invariance and totality of compare_lex; plus the support-greyscale
// component property for every antipodal pair.
VerificationReport run_lemma_suite(const Graph& g, std::size_t trials,
                                   std::uint64_t seed,
                                   const LemmaSuiteOptions& options = {});

struct VerifyOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::int64_t oracle_denominator = 840;
  std::size_t oracle_max_free = 4;
  double oracle_budget = 1e9;
  int jobs = 0;
};

// Everything cmd_verify runs on a solved problem.
VerificationReport verify_solution_set(const Graph& g,
                                       const IncompleteGreyscale& fixed,
                                       const SolutionSet& set,
                                       const VerifyOptions& options = {});

}  // namespace gradation
