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

#include "gradation/error.hpp"
#include "gradation/graph.hpp"
#include "gradation/greyscale.hpp"

namespace gradation {

class OracleBudgetExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct OracleOptions {
  // The search runs when the free vertices left after placing the extremes
  // number at most max_free, or when (L+1)^free <= budget.
  std::size_t max_free = 4;
  double budget = 1e9;
  // 1 selects the serial reference search; 0 uses the OpenMP default.
  int jobs = 0;
};

// Lexicographically minimum gradation vector over all greyscales whose free
// tones lie on {0, 1/L, ..., 1}, honouring `fixed` (which must lie on the
// grid). Exact branch and bound in integer grid units: a partial assignment
// is abandoned when its known edge tones, padded with zeros, already
// compare >= the incumbent. This is the true optimum when the optimum's
// denominators divide L and an upper bound otherwise.
GradationVector brute_force_min_gradation(const Graph& g,
                                          const IncompleteGreyscale& fixed,
                                          std::int64_t grid_denominator,
                                          const OracleOptions& options = {});

// True when every tone of `f` is a multiple of 1/L.
bool on_grid(const Greyscale& f, std::int64_t grid_denominator);

}  // namespace gradation
