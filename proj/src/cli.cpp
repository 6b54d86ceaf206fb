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

#include "gradation/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "gradation/error.hpp"
#include "gradation/generators.hpp"
#include "gradation/io.hpp"
#include "gradation/render.hpp"
#include "gradation/solver.hpp"
#include "gradation/verify.hpp"

namespace gradation::cli {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open input '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Problem load(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InvalidInput("--input is required");
  Problem p = load_problem(read_file(cfg.input), cfg.graph_format);
  if (p.graph.vertex_count() == 0) throw InvalidInput("graph has no vertices");
  if (!is_connected(p.graph)) {
    throw DisconnectedGraph(
        "graph is disconnected; each connected component has to be solved "
        "separately, which this tool leaves to the caller");
  }
  switch (cfg.mode) {
    case Mode::kMigg:
      if (!p.fixed.empty()) {
        throw InvalidInput("mode migg given but the problem prefixes tones");
      }
      break;
    case Mode::kRmigg:
      if (p.fixed.empty()) {
        throw InvalidInput("mode rmigg needs prefixed tones in \"fixed\"");
      }
      [[fallthrough]];
    case Mode::kAuto:
      if (!p.fixed.empty() && p.fixed.size() >= p.graph.vertex_count()) {
        throw InvalidInput("prefixed tones must leave at least one vertex free");
      }
      break;
  }
  return p;
}

SolveOptions solve_options(const RunConfig& cfg) {
  return {cfg.restrict_antipodal, cfg.prune, cfg.jobs};
}

std::size_t shown(const RunConfig& cfg, const SolutionSet& set) {
  return cfg.all_solutions ? set.solutions.size()
                           : std::min<std::size_t>(1, set.solutions.size());
}

std::string tone_list(std::span<const Tone> tones) {
  std::string out = "[";
  for (std::size_t i = 0; i < tones.size(); ++i) {
    if (i) out += ", ";
    out += tones[i].str();
  }
  return out + "]";
}

void write_text(const RunConfig& cfg, const Problem& p, const SolutionSet& set,
                std::ostream& out) {
  out << "problem: " << to_string(classify(p.fixed))
      << " (n=" << p.graph.vertex_count() << ", m=" << p.graph.edge_count()
      << ")\n";
  out << "vector: " << format_run_length(set.vector) << "\n";
  out << "greyscales: " << set.solutions.size();
  const std::size_t count = shown(cfg, set);
  if (count < set.solutions.size()) {
    out << " (showing " << count << "; use --all-solutions)";
  }
  out << "\n";
  for (std::size_t i = 0; i < count; ++i) {
    const Solution& s = set.solutions[i];
    out << "  " << tone_list(s.greyscale.tones());
    if (s.anchor.zero) out << "  zero=" << *s.anchor.zero;
    if (s.anchor.one) out << "  one=" << *s.anchor.one;
    out << "  iterations=" << s.trace.iterations.size() << "\n";
  }
  out << "candidates: " << set.stats.candidates
      << "  pruned: " << set.stats.pruned << "\n";
}

void write_dot(const RunConfig& cfg, const Problem& p, const SolutionSet& set,
               std::ostream& out) {
  const std::size_t count = shown(cfg, set);
  for (std::size_t i = 0; i < count; ++i) {
    const std::string name =
        count == 1 ? "gradation" : "gradation_" + std::to_string(i);
    out << render_dot(p.graph, set.solutions[i].greyscale, name);
  }
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::kInvariantViolation);
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::string variant;
  double seconds = 0;
  std::size_t iterations = 0;
  std::size_t candidates = 0;
  std::size_t pruned = 0;
  std::string note;
};

std::size_t max_iterations(const SolutionSet& set) {
  std::size_t most = 0;
  for (const auto& s : set.solutions) {
    most = std::max(most, s.trace.iterations.size());
  }
  return most;
}

BenchRow timed_solve(const std::string& family, const Graph& g,
                     const IncompleteGreyscale& fixed, const std::string& variant,
                     const SolveOptions& options, SolutionSet* keep = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  SolutionSet set = solve(g, fixed, options);
  BenchRow row{family, g.vertex_count(), variant, seconds_since(start),
               max_iterations(set), set.stats.candidates, set.stats.pruned, ""};
  if (keep) *keep = std::move(set);
  return row;
}

std::string payload(const SolutionSet& set) {
  json j = solution_set_to_json(set);
  j.erase("stats");
  return j.dump();
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Problem p = load(cfg);
    const SolutionSet set = solve(p.graph, p.fixed, solve_options(cfg));
    switch (cfg.format) {
      case OutputFormat::kJson: {
        json j = solution_set_to_json(set, shown(cfg, set));
        j["problem"] = to_string(classify(p.fixed));
        out << j.dump(2) << "\n";
        break;
      }
      case OutputFormat::kText:
        write_text(cfg, p, set, out);
        break;
      case OutputFormat::kDot:
        write_dot(cfg, p, set, out);
        break;
    }
    return 0;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Problem p = load(cfg);
    const SolutionSet set = solve(p.graph, p.fixed, solve_options(cfg));
    VerifyOptions vo;
    vo.trials = cfg.trials;
    vo.seed = cfg.seed;
    vo.oracle_denominator = cfg.oracle_denominator;
    vo.jobs = cfg.jobs;
    const VerificationReport report =
        verify_solution_set(p.graph, p.fixed, set, vo);
    if (cfg.format == OutputFormat::kJson) {
      out << report_to_json(report).dump(2) << "\n";
    } else {
      for (const Check& c : report.checks) {
        out << (c.skipped   ? "SKIP "
                : c.flagged ? "FLAG "
                : c.pass    ? "PASS "
                            : "FAIL ")
            << c.name;
        if (c.witness) out << ": " << *c.witness;
        out << "\n";
      }
      out << "overall: " << (report.overall() ? "pass" : "fail") << "\n";
    }
    return report.overall() ? 0 : static_cast<int>(ErrorKind::kInvariantViolation);
  });
}

int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Problem p = load(cfg);
    const SolutionSet set = solve(p.graph, p.fixed, solve_options(cfg));
    write_dot(cfg, p, set, out);
    return 0;
  });
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<BenchRow> rows;
    SolveOptions base = solve_options(cfg);

    for (std::size_t n : {50, 100, 200}) {
      const Graph g = path_graph(n);
      IncompleteGreyscale fixed{{0, Tone::zero()},
                                {static_cast<Vertex>(n - 1), Tone::one()}};
      rows.push_back(timed_solve("path", g, fixed, "rmigg-both", base));
    }
    for (std::size_t n : {10, 20, 40}) {
      rows.push_back(timed_solve("cycle", cycle_graph(n), {}, "migg", base));
    }
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t n : {10, 20, 30}) {
      const Graph g = random_connected_graph(n, 0.1, rng);
      rows.push_back(timed_solve("random", g, {}, "migg", base));
    }

    {
      const Graph c10 = cycle_graph(10);
      SolutionSet on;
      SolutionSet off;
      SolveOptions restricted = base;
      restricted.restrict_antipodal = true;
      SolveOptions unrestricted = base;
      unrestricted.restrict_antipodal = false;
      rows.push_back(timed_solve("cycle", c10, {}, "antipodal-on", restricted, &on));
      rows.push_back(timed_solve("cycle", c10, {}, "antipodal-off", unrestricted, &off));
      rows.back().note = payload(on) == payload(off) ? "identical" : "DIFFERENT";
    }
    {
      std::mt19937_64 prng(cfg.seed + 12);
      const Graph g = random_connected_graph(12, 0.2, prng);
      SolutionSet on;
      SolutionSet off;
      SolveOptions pruned = base;
      pruned.prune = true;
      SolveOptions unpruned = base;
      unpruned.prune = false;
      unpruned.restrict_antipodal = pruned.restrict_antipodal = false;
      rows.push_back(timed_solve("random", g, {}, "prune-off", unpruned, &off));
      rows.push_back(timed_solve("random", g, {}, "prune-on", pruned, &on));
      rows.back().note = payload(on) == payload(off) ? "identical" : "DIFFERENT";
    }
    {
      std::mt19937_64 prng(cfg.seed + 30);
      const Graph g = random_connected_graph(30, 0.08, prng);
      SolutionSet serial;
      SolutionSet parallel;
      SolveOptions one = base;
      one.jobs = 1;
      one.restrict_antipodal = false;
      SolveOptions many = one;
      many.jobs = cfg.jobs;
      rows.push_back(timed_solve("random", g, {}, "serial", one, &serial));
      rows.push_back(timed_solve("random", g, {}, "parallel", many, &parallel));
      rows.back().note = payload(serial) == payload(parallel) ? "identical" : "DIFFERENT";
    }

    if (cfg.format == OutputFormat::kJson) {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"family", r.family},
                       {"n", r.n},
                       {"variant", r.variant},
                       {"seconds", r.seconds},
                       {"iterations", r.iterations},
                       {"candidates", r.candidates},
                       {"pruned", r.pruned},
                       {"note", r.note}});
      }
      out << arr.dump(2) << "\n";
    } else {
      out << std::left << std::setw(8) << "family" << std::setw(6) << "n"
          << std::setw(15) << "variant" << std::setw(12) << "seconds"
          << std::setw(11) << "iterations" << std::setw(11) << "candidates"
          << std::setw(8) << "pruned" << "note\n";
      for (const auto& r : rows) {
        out << std::left << std::setw(8) << r.family << std::setw(6) << r.n
            << std::setw(15) << r.variant << std::setw(12) << std::fixed
            << std::setprecision(6) << r.seconds << std::setw(11)
            << r.iterations << std::setw(11) << r.candidates << std::setw(8)
            << r.pruned << r.note << "\n";
      }
    }
    const bool consistent = std::none_of(rows.begin(), rows.end(), [](const BenchRow& r) {
      return r.note == "DIFFERENT";
    });
    return consistent ? 0 : static_cast<int>(ErrorKind::kInvariantViolation);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("GRADATION_JOBS")) {
    cfg.jobs = std::atoi(env);
  }

  CLI::App app{"Minimum gradation greyscales of graphs, in exact arithmetic"};
  app.require_subcommand(1);

  const std::map<std::string, Mode> modes{
      {"auto", Mode::kAuto}, {"migg", Mode::kMigg}, {"rmigg", Mode::kRmigg}};
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::kJson},
      {"text", OutputFormat::kText},
      {"dot", OutputFormat::kDot}};
  const std::map<std::string, GraphFormat> graph_formats{
      {"edge-list", GraphFormat::kEdgeList},
      {"dimacs", GraphFormat::kDimacs},
      {"json", GraphFormat::kJson}};

  bool no_restriction = false;
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* input = sub->add_option("--input", cfg.input, "Problem or graph file");
    if (needs_input) input->required();
    sub->add_option("--graph-format", cfg.graph_format, "Force the input format")
        ->transform(CLI::CheckedTransformer(graph_formats, CLI::ignore_case));
    sub->add_option("--mode", cfg.mode, "auto, migg or rmigg")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    sub->add_flag("--all-solutions", cfg.all_solutions,
                  "Emit every optimal greyscale instead of the first");
    sub->add_flag("--prune", cfg.prune, "Discard dominated candidate runs");
    sub->add_flag("--no-antipodal-restriction", no_restriction,
                  "Try every vertex pair for the extremes");
    sub->add_option("--oracle", cfg.oracle_denominator,
                    "Grid denominator of the brute-force oracle")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json, text or dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--jobs", cfg.jobs, "Worker threads (1 = serial)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--trials", cfg.trials, "Random greyscales per lemma check");
  };
  auto* solve_cmd = app.add_subcommand("solve", "Solve and print the solution set");
  auto* verify_cmd = app.add_subcommand("verify", "Solve and verify the result");
  auto* render_cmd = app.add_subcommand("render", "Solve and emit Graphviz DOT");
  auto* bench_cmd = app.add_subcommand("bench", "Time the solvers on generated graphs");
  add_common(solve_cmd, true);
  add_common(verify_cmd, true);
  add_common(render_cmd, true);
  add_common(bench_cmd, false);

  std::vector<const char*> argv{"gradation"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::kInvalidInput);
  }
  cfg.restrict_antipodal = !no_restriction;

  if (*solve_cmd) {
    cfg.command = Command::kSolve;
    return cmd_solve(cfg, out, err);
  }
  if (*verify_cmd) {
    cfg.command = Command::kVerify;
    return cmd_verify(cfg, out, err);
  }
  if (*render_cmd) {
    cfg.command = Command::kRender;
    return cmd_render(cfg, out, err);
  }
  cfg.command = Command::kBench;
  return cmd_bench(cfg, out, err);
}

}  // namespace gradation::cli
