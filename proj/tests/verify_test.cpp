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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "gradation/generators.hpp"
#include "gradation/verify.hpp"
#include "support/oracles.hpp"

namespace gradation {
namespace {

using testing::make_graph;
using testing::tones;
using testing::vec;

Graph kite() { return make_graph(4, {{0, 1}, {1, 2}, {0, 3}, {3, 1}}); }
const IncompleteGreyscale kKiteFixed{{0, Tone::zero()}, {2, Tone::one()}};

bool passes(const VerificationReport& r, const std::string& name) {
  const Check* c = r.find(name);
  EXPECT_NE(c, nullptr) << name;
  return c != nullptr && c->pass;
}

TEST(CheckSolution, AcceptsSolverOutput) {
  auto s = rmigg_both_extremes(kite(), kKiteFixed);
  auto report = check_solution(kite(), kKiteFixed, s);
  EXPECT_TRUE(report.overall());
  for (const char* name : {"valid_greyscale", "compatible", "vector_recomputed",
                           "trace_strict_decrease", "trace_colouring",
                           "trace_coverage"}) {
    EXPECT_TRUE(passes(report, name));
  }
}

TEST(CheckSolution, DetectsCorruptedTone) {
  auto s = rmigg_both_extremes(kite(), kKiteFixed);
  std::vector<Tone> t(s.greyscale.tones().begin(), s.greyscale.tones().end());
  t[1] = Tone(1, 3);
  s.greyscale = Greyscale(t);
  auto report = check_solution(kite(), kKiteFixed, s);
  EXPECT_FALSE(report.overall());
  EXPECT_FALSE(passes(report, "vector_recomputed"));
  EXPECT_FALSE(passes(report, "trace_colouring"));
}

TEST(CheckSolution, DetectsMissingExtreme) {
  Solution s{tones({"0", "1/2", "1/2"}), vec({"1/2", "0"}), {}, {}};
  auto report = check_solution(path_graph(3), {}, s);
  EXPECT_FALSE(passes(report, "valid_greyscale"));
  EXPECT_EQ(*report.find("valid_greyscale")->witness, "tone 1 not attained");
}

TEST(CheckSolution, DetectsIncompatibility) {
  auto s = rmigg_both_extremes(kite(), kKiteFixed);
  IncompleteGreyscale other = kKiteFixed;
  other[3] = Tone(1, 2);
  EXPECT_FALSE(passes(check_solution(kite(), other, s), "compatible"));
}

TEST(CheckSolution, DetectsNonDecreasingTrace) {
  auto s = rmigg_both_extremes(kite(), kKiteFixed);
  s.trace.iterations[1].max_increase = Tone(1, 2);
  EXPECT_FALSE(passes(check_solution(kite(), kKiteFixed, s), "trace_strict_decrease"));
}

TEST(VectorShape, FlagsComponentOutsideTracedMaxima) {
  CcmTrace trace;
  trace.iterations.resize(2);
  trace.iterations[0].max_increase = Tone(1, 2);
  trace.iterations[1].max_increase = Tone(1, 4);
  auto odd = check_vector_shape(trace, vec({"1/2", "3/8", "1/4"}));
  EXPECT_TRUE(odd.overall());
  EXPECT_TRUE(odd.find("vector_shape")->flagged);
  EXPECT_EQ(*odd.find("vector_shape")->witness,
            "components (3/8) not among maxima (1/2,1/4)");

  auto clean = check_vector_shape(trace, vec({"1/2", "1/4", "0"}));
  EXPECT_TRUE(clean.overall());
  EXPECT_FALSE(clean.find("vector_shape")->flagged);

  EXPECT_FALSE(check_vector_shape(trace, vec({"1", "1/2"})).overall());
  EXPECT_FALSE(check_vector_shape(CcmTrace{}, vec({"1/2"})).overall());
  EXPECT_TRUE(check_vector_shape(CcmTrace{}, vec({"0", "0"})).overall());
}

TEST(VectorShape, KiteAndDiamondConform) {
  auto kite_s = rmigg_both_extremes(kite(), kKiteFixed);
  auto r = check_vector_shape(kite_s.trace, kite_s.vector);
  EXPECT_TRUE(r.overall());
  EXPECT_FALSE(r.find("vector_shape")->flagged);

  Graph diamond = make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}});
  auto d = rmigg_both_extremes(diamond, {{0, Tone::zero()}, {3, Tone::one()}});
  EXPECT_FALSE(check_vector_shape(d.trace, d.vector).find("vector_shape")->flagged);
}

// Smallest instance found where an edge inside the coloured set, on no
// maximizing geodesic, receives a tone that is not a traced maximum.
TEST(VectorShape, IntermediateToneOnEightVertices) {
  Graph g = make_graph(8, {{0, 1}, {0, 3}, {0, 4}, {0, 6}, {0, 7}, {1, 2},
                           {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 5}, {3, 6},
                           {3, 7}, {4, 6}, {5, 6}, {5, 7}});
  IncompleteGreyscale fixed{{2, Tone::zero()}, {4, Tone::one()}};
  auto s = rmigg_both_extremes(g, fixed);
  EXPECT_EQ(s.greyscale, tones({"3/4", "1/2", "0", "5/8", "1", "1/3", "2/3", "13/24"}));
  EXPECT_EQ(s.vector, vec({"1/2", "1/2", "1/3", "1/3", "1/3", "1/4", "1/4", "5/24",
                           "5/24", "1/6", "1/6", "1/8", "1/8", "1/12", "1/12", "1/24"}));
  EXPECT_TRUE(check_solution(g, fixed, s).overall());
  auto shape = check_vector_shape(s.trace, s.vector);
  EXPECT_TRUE(shape.overall());
  EXPECT_TRUE(shape.find("vector_shape")->flagged);
  EXPECT_EQ(*shape.find("vector_shape")->witness,
            "components (1/24) not among maxima (1/2,1/3,1/4,5/24,1/6,1/8,1/12)");
  const auto& last = s.trace.iterations.back();
  EXPECT_EQ(last.max_increase, Tone(1, 12));
  EXPECT_NE(std::find(last.saturated.begin(), last.saturated.end(),
                      SaturatedEdge{Edge(3, 6), Tone(1, 24)}),
            last.saturated.end());
}

TEST(CheckSolution, DetectsUnsaturatedEdge) {
  auto s = rmigg_both_extremes(kite(), kKiteFixed);
  s.trace.iterations.pop_back();
  auto report = check_solution(kite(), kKiteFixed, s);
  EXPECT_FALSE(passes(report, "trace_coverage"));
}

TEST(Antipodal, ExtremesMustBeAntipodal) {
  EXPECT_TRUE(check_antipodal_extremes(cycle_graph(4), tones({"0", "1/2", "1", "1/2"})));
  EXPECT_FALSE(check_antipodal_extremes(cycle_graph(4), tones({"0", "1", "1/2", "1/2"})));
  EXPECT_TRUE(check_diameter_prefix(path_graph(3), vec({"1/2", "1/2"})));
  EXPECT_FALSE(check_diameter_prefix(path_graph(3), vec({"1", "0"})));
}

TEST(Geodesics, EnumeratesAllShortestPaths) {
  Graph c4 = cycle_graph(4);
  auto d = all_pairs_distances(c4);
  auto paths = enumerate_geodesics(c4, d, 0, 2);
  EXPECT_EQ(paths, (std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 3, 2}}));
  EXPECT_EQ(enumerate_geodesics(c4, d, 0, 2, 1).size(), 1u);
}

TEST(LemmaSuite, PassesOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_connected_graph(3 + trial % 7, 0.3, rng);
    auto report = run_lemma_suite(g, 20, trial);
    EXPECT_TRUE(report.overall());
  }
}

TEST(LemmaSuite, DetectsWrongDistanceInIncrease) {
  LemmaSuiteOptions mutant;
  mutant.increase = [](const Greyscale& f, const DistanceMatrix& d, Vertex u,
                       Vertex v) {
    if (u == v) return Tone::zero();
    return Tone::from_rational(
        abs(mpq_class(f[u].value() - f[v].value())) /
        mpq_class(static_cast<unsigned long>(d.hops(u, v) + 1)));
  };
  EXPECT_FALSE(run_lemma_suite(cycle_graph(5), 20, 1, mutant).overall());
  EXPECT_FALSE(run_lemma_suite(path_graph(4), 20, 1, mutant).overall());
}

TEST(LemmaSuite, Deterministic) {
  auto a = run_lemma_suite(cycle_graph(6), 10, 5);
  auto b = run_lemma_suite(cycle_graph(6), 10, 5);
  EXPECT_EQ(a.checks, b.checks);
}

TEST(VerifySolutionSet, FourCycle) {
  auto set = migg(cycle_graph(4));
  auto report = verify_solution_set(cycle_graph(4), {}, set);
  EXPECT_TRUE(report.overall());
  EXPECT_TRUE(passes(report, "oracle_agreement"));
  EXPECT_FALSE(report.find("oracle_agreement")->skipped);
  EXPECT_TRUE(passes(report, "diameter_prefix"));
  EXPECT_TRUE(passes(report, "solution[1].antipodal_extremes"));
}

TEST(VerifySolutionSet, DiamondWithZeroToneChord) {
  Graph diamond = make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}});
  IncompleteGreyscale fixed{{0, Tone::zero()}, {3, Tone::one()}};
  auto report = verify_solution_set(diamond, fixed, solve(diamond, fixed));
  EXPECT_TRUE(report.overall());
}

TEST(VerifySolutionSet, OracleSkippedOverBudget) {
  VerifyOptions opts;
  opts.oracle_max_free = 0;
  opts.oracle_budget = 1;
  auto set = migg(cycle_graph(6));
  auto report = verify_solution_set(cycle_graph(6), {}, set, opts);
  const Check* oracle = report.find("oracle_agreement");
  ASSERT_NE(oracle, nullptr);
  EXPECT_TRUE(oracle->skipped);
  EXPECT_TRUE(report.overall());
  EXPECT_NE(report.find("lemma.lemma_three_point"), nullptr);
}

TEST(VerifySolutionSet, OracleSkippedForOffGridPrefix) {
  IncompleteGreyscale fixed{{1, Tone(1, 7)}};
  VerifyOptions opts;
  opts.oracle_denominator = 4;
  auto set = solve(path_graph(3), fixed);
  auto report = verify_solution_set(path_graph(3), fixed, set, opts);
  EXPECT_TRUE(report.find("oracle_agreement")->skipped);
  EXPECT_TRUE(report.overall());
}

TEST(VerifySolutionSet, FlagsSuboptimalVector) {
  auto set = migg(path_graph(4));
  // Replace the optimum by the halves greyscale, which is valid but worse.
  Solution worse = set.solutions[0];
  worse.greyscale = tones({"0", "1/2", "1/2", "1"});
  worse.vector = vec({"1/2", "1/2", "0"});
  set.solutions = {worse};
  set.vector = worse.vector;
  EXPECT_FALSE(verify_solution_set(path_graph(4), {}, set).overall());
}

}  // namespace
}  // namespace gradation
