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

// Serial reference paths against their OpenMP counterparts.

#include <random>

#include <gtest/gtest.h>

#include "gradation/generators.hpp"
#include "gradation/graph.hpp"
#include "gradation/io.hpp"
#include "gradation/solver.hpp"

namespace gradation {
namespace {

TEST(Parallel, DistanceMatricesIdentical) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected_graph(5 + 7 * trial, 0.05, rng);
    EXPECT_EQ(all_pairs_distances(g), all_pairs_distances_serial(g));
  }
}

TEST(Parallel, SolutionSetsIdentical) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected_graph(4 + trial % 9, 0.2, rng);
    SolveOptions serial;
    serial.jobs = 1;
    SolveOptions parallel;
    parallel.jobs = 4;
    const auto a = migg(g, serial);
    const auto b = migg(g, parallel);
    EXPECT_EQ(a, b);
    EXPECT_EQ(solution_set_to_json(a).dump(), solution_set_to_json(b).dump());
  }
}

TEST(Parallel, RestrictedWrappersIdentical) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected_graph(5 + trial % 6, 0.25, rng);
    IncompleteGreyscale fixed{{0, Tone(1, 3)}};
    if (trial % 2) fixed[1] = Tone::one();
    SolveOptions serial;
    serial.jobs = 1;
    EXPECT_EQ(solve(g, fixed, serial), solve(g, fixed));
  }
}

}  // namespace
}  // namespace gradation
