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

#include <string>
#include <string_view>

#include "gradation/graph.hpp"
#include "gradation/greyscale.hpp"

namespace gradation {

// "#hhhhhh" with every channel round(255 * (1 - tone)), halves rounded away
// from zero: tone 0 is white, tone 1 black.
std::string grey_fill(const Tone& tone);

// Undirected DOT graph: vertices filled by grey_fill, edges labelled with
// their tone. Output depends only on the inputs.
std::string render_dot(const Graph& g, const Greyscale& f,
                       std::string_view name = "gradation");

}  // namespace gradation
