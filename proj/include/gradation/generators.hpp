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
#include <random>

#include "gradation/graph.hpp"
#include "gradation/greyscale.hpp"

namespace gradation {

Graph path_graph(std::size_t vertices);
Graph cycle_graph(std::size_t vertices);
Graph complete_graph(std::size_t vertices);
// Centre 0 joined to leaves 1..leaves.
Graph star_graph(std::size_t leaves);

// Uniform random recursive tree plus each remaining pair with probability
// `extra_edge_probability`. Always connected.
Graph random_connected_graph(std::size_t vertices,
                             double extra_edge_probability, std::mt19937_64& rng);

// Tones p/q with q uniform in 1..max_denominator and p uniform in 0..q;
// 0 and 1 are forced onto two distinct random vertices. Needs n >= 2.
Greyscale random_greyscale(std::size_t vertices, std::mt19937_64& rng,
                           int max_denominator = 24);

}  // namespace gradation
