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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gradation/parse.hpp"

namespace gradation::cli {

enum class Command { kSolve, kVerify, kRender, kBench };
enum class Mode { kAuto, kMigg, kRmigg };
enum class OutputFormat { kJson, kText, kDot };

struct RunConfig {
  Command command = Command::kSolve;
  std::string input;
  std::optional<GraphFormat> graph_format;
  Mode mode = Mode::kAuto;
  bool all_solutions = false;
  bool prune = false;
  bool restrict_antipodal = true;
  std::int64_t oracle_denominator = 840;
  OutputFormat format = OutputFormat::kText;
  int jobs = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 20;
};

// Each returns the process exit status: 0 success, 1 invalid input,
// 2 disconnected graph, 3 invariant violation (including failed
// verification).
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv (without the program name handling done by the caller) and
// dispatches. GRADATION_JOBS supplies the default for --jobs.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gradation::cli
