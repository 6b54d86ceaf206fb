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

#include <gtest/gtest.h>

#include "gradation/error.hpp"
#include "gradation/generators.hpp"
#include "gradation/oracle.hpp"
#include "support/oracles.hpp"

namespace gradation {
namespace {

using testing::make_graph;
using testing::tones;
using testing::vec;

TEST(Oracle, SmallGraphs) {
  EXPECT_EQ(brute_force_min_gradation(path_graph(3), {}, 4), vec({"1/2", "1/2"}));
  EXPECT_EQ(brute_force_min_gradation(cycle_graph(4), {}, 4),
            vec({"1/2", "1/2", "1/2", "1/2"}));
  EXPECT_EQ(brute_force_min_gradation(complete_graph(4), {}, 12),
            vec({"1", "1/2", "1/2", "1/2", "1/2", "0"}));
}

TEST(Oracle, CoarseGridGivesUpperBound) {
  // The optimum 1/3 steps are not on the halves grid; the best halves
  // greyscale repeats the middle tone.
  EXPECT_EQ(brute_force_min_gradation(path_graph(4), {}, 2),
            vec({"1/2", "1/2", "0"}));
  EXPECT_EQ(brute_force_min_gradation(path_graph(4), {}, 3),
            vec({"1/3", "1/3", "1/3"}));
}

TEST(Oracle, HonoursPrefixedTones) {
  EXPECT_EQ(brute_force_min_gradation(path_graph(3), {{1, Tone(1, 4)}}, 4),
            vec({"3/4", "1/4"}));
  EXPECT_EQ(brute_force_min_gradation(star_graph(3), {{1, Tone::zero()}}, 2),
            vec({"1/2", "1/2", "0"}));
  Graph diamond = make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}});
  EXPECT_EQ(brute_force_min_gradation(diamond,
                                      {{0, Tone::zero()}, {3, Tone::one()}}, 6),
            vec({"1/2", "1/2", "1/2", "1/2", "0"}));
}

TEST(Oracle, SerialAndParallelAgree) {
  OracleOptions serial;
  serial.jobs = 1;
  for (std::size_t n = 3; n <= 5; ++n) {
    EXPECT_EQ(brute_force_min_gradation(cycle_graph(n), {}, 12, serial),
              brute_force_min_gradation(cycle_graph(n), {}, 12));
  }
}

TEST(Oracle, Guards) {
  EXPECT_THROW(brute_force_min_gradation(path_graph(3), {{1, Tone(1, 3)}}, 4),
               InvalidInput);
  EXPECT_THROW(brute_force_min_gradation(path_graph(3), {}, 0), InvalidInput);
  EXPECT_THROW(brute_force_min_gradation(make_graph(4, {{0, 1}, {2, 3}}), {}, 2),
               DisconnectedGraph);
  OracleOptions tight;
  tight.max_free = 1;
  tight.budget = 10;
  EXPECT_THROW(brute_force_min_gradation(path_graph(8), {}, 840, tight),
               OracleBudgetExceeded);
}

TEST(Oracle, AgreesWithExhaustiveEnumeration) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : testing::connected_graphs_up_to_isomorphism(n)) {
      for (std::int64_t L : {2, 3, 4, 6}) {
        OracleOptions unlimited;
        unlimited.max_free = n;
        EXPECT_EQ(brute_force_min_gradation(g, {}, L, unlimited),
                  testing::exhaustive_min_gradation(g, {}, L))
            << "n=" << n << " L=" << L;
        if (n < 3) continue;
        const IncompleteGreyscale fixed{{0, Tone(1, 2)}};
        EXPECT_EQ(brute_force_min_gradation(g, fixed, L == 3 ? 6 : L, unlimited),
                  testing::exhaustive_min_gradation(g, fixed, L == 3 ? 6 : L));
      }
    }
  }
}

TEST(OnGrid, Multiples) {
  EXPECT_TRUE(on_grid(tones({"0", "1/4", "1/2", "1"}), 4));
  EXPECT_FALSE(on_grid(tones({"0", "1/3"}), 4));
  EXPECT_TRUE(on_grid(tones({"1/7", "1/8", "1/5"}), 840));
}

}  // namespace
}  // namespace gradation
