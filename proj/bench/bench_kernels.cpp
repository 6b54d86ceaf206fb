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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "gradation/generators.hpp"
#include "gradation/graph.hpp"
#include "gradation/oracle.hpp"
#include "gradation/solver.hpp"

namespace {

using namespace gradation;

Graph sample_graph(std::size_t n, double p) {
  std::mt19937_64 rng(17);
  return random_connected_graph(n, p, rng);
}

void BM_DistancesSerial(benchmark::State& state) {
  const Graph g = sample_graph(static_cast<std::size_t>(state.range(0)), 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances_serial(g));
}

void BM_DistancesParallel(benchmark::State& state) {
  const Graph g = sample_graph(static_cast<std::size_t>(state.range(0)), 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}

void BM_Migg(benchmark::State& state) {
  const Graph g = sample_graph(static_cast<std::size_t>(state.range(0)), 0.1);
  SolveOptions options;
  options.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(migg(g, options));
}

void BM_Oracle(benchmark::State& state) {
  const Graph g = sample_graph(6, 0.3);
  OracleOptions options;
  options.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_min_gradation(g, {}, 12, options));
  }
}

BENCHMARK(BM_DistancesSerial)->Arg(100)->Arg(400);
BENCHMARK(BM_DistancesParallel)->Arg(100)->Arg(400);
// Second argument is the job count: 1 is the serial path, 0 the OpenMP default.
BENCHMARK(BM_Migg)->Args({30, 1})->Args({30, 0})->Args({60, 1})->Args({60, 0});
BENCHMARK(BM_Oracle)->Arg(1)->Arg(0);

}  // namespace

BENCHMARK_MAIN();
