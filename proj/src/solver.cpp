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

#include "gradation/solver.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include <omp.h>

#include "gradation/error.hpp"

namespace gradation {
namespace {

struct Candidate {
  IncompleteGreyscale fixed;
  Anchor anchor;
};

bool has_tone(const IncompleteGreyscale& fixed, bool one) {
  return std::any_of(fixed.begin(), fixed.end(), [&](const auto& entry) {
    return one ? entry.second.is_one() : entry.second.is_zero();
  });
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) {
    throw DisconnectedGraph(
        "graph is disconnected; solve each connected component separately");
  }
}

void require_prefix_in_range(const Graph& g, const IncompleteGreyscale& fixed) {
  if (fixed.empty()) throw InvalidInput("no prefixed tones");
  for (const auto& [v, tone] : fixed) {
    if (v >= g.vertex_count()) {
      throw InvalidInput("prefixed vertex " + std::to_string(v) +
                         " out of range for n=" +
                         std::to_string(g.vertex_count()));
    }
  }
}

std::vector<Vertex> free_vertices(const Graph& g,
                                  const IncompleteGreyscale& fixed) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!fixed.contains(v)) out.push_back(v);
  }
  return out;
}

int thread_count(const SolveOptions& options) {
  return options.jobs > 0 ? options.jobs : omp_get_max_threads();
}

// Runs each candidate to completion; slot i holds candidate i's result.
std::vector<std::optional<CcmResult>> run_all(
    const Graph& g, const std::vector<Candidate>& candidates,
    const SolveOptions& options) {
  const auto count = static_cast<std::int64_t>(candidates.size());
  std::vector<std::optional<CcmResult>> results(candidates.size());
  if (thread_count(options) == 1) {
    for (std::int64_t i = 0; i < count; ++i) {
      results[i] = ccm(g, candidates[i].fixed);
    }
    return results;
  }
  std::vector<std::exception_ptr> errors(candidates.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(options))
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      results[i] = ccm(g, candidates[i].fixed);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

// Advances all runs one iteration per round and drops dominated runs after
// every round. Pruned slots stay empty.
std::vector<std::optional<CcmResult>> run_pruned(
    const Graph& g, const std::vector<Candidate>& candidates,
    const SolveOptions& options, SolveStats& stats) {
  std::vector<CcmRun> runs;
  runs.reserve(candidates.size());
  for (const auto& c : candidates) runs.emplace_back(g, c.fixed);

  std::vector<std::size_t> active(candidates.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  const int threads = thread_count(options);
  std::vector<std::exception_ptr> errors(candidates.size());

  auto all_done = [&] {
    return std::all_of(active.begin(), active.end(),
                       [&](std::size_t i) { return runs[i].done(); });
  };
  while (!all_done()) {
    const auto count = static_cast<std::int64_t>(active.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
    for (std::int64_t k = 0; k < count; ++k) {
      try {
        runs[active[k]].step();
      } catch (...) {
        errors[active[k]] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    std::vector<PruneView> views;
    views.reserve(active.size());
    for (std::size_t i : active) {
      views.push_back({runs[i].settled(), runs[i].ceiling()});
    }
    std::vector<std::size_t> survivors;
    for (std::size_t k : prune_candidates(views)) survivors.push_back(active[k]);
    stats.pruned += active.size() - survivors.size();
    active = std::move(survivors);
  }

  std::vector<std::optional<CcmResult>> results(candidates.size());
  for (std::size_t i : active) results[i] = runs[i].result();
  return results;
}

// Keeps the candidates whose vectors are lexicographically minimal, in
// candidate order.
SolutionSet select_minimum(const Graph& g,
                           const std::vector<Candidate>& candidates,
                           const SolveOptions& options, bool canonicalize) {
  SolutionSet set;
  set.stats.candidates = candidates.size();
  auto results = options.prune ? run_pruned(g, candidates, options, set.stats)
                               : run_all(g, candidates, options);

  std::vector<Solution> winners;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!results[i]) continue;
    Solution s{std::move(results[i]->mapping), {}, std::move(results[i]->trace),
               candidates[i].anchor};
    s.vector = gradation_vector(g, s.greyscale);
    if (!winners.empty()) {
      const LexOrder order = compare_lex(s.vector, winners.front().vector);
      if (order == LexOrder::kGreater) continue;
      if (order == LexOrder::kLess) winners.clear();
    }
    winners.push_back(std::move(s));
  }
  if (winners.empty()) {
    throw InvariantViolation("no candidate survived");
  }
  if (canonicalize) {
    for (auto& s : winners) {
      Greyscale flipped = complement(s.greyscale);
      if (flipped < s.greyscale) {
        s.greyscale = std::move(flipped);
        s.trace = complement(s.trace);
        std::swap(s.anchor.zero, s.anchor.one);
      }
    }
  }
  set.vector = winners.front().vector;
  set.solutions = dedupe_complementary(std::move(winners));
  return set;
}

}  // namespace

ProblemKind classify(const IncompleteGreyscale& fixed) {
  if (fixed.empty()) return ProblemKind::kMigg;
  const bool zero = has_tone(fixed, false);
  const bool one = has_tone(fixed, true);
  if (zero && one) return ProblemKind::kBothExtremes;
  if (zero || one) return ProblemKind::kOneExtreme;
  return ProblemKind::kNoExtreme;
}

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMigg:
      return "migg";
    case ProblemKind::kBothExtremes:
      return "rmigg-both-extremes";
    case ProblemKind::kOneExtreme:
      return "rmigg-one-extreme";
    case ProblemKind::kNoExtreme:
      return "rmigg-no-extreme";
  }
  return "unknown";
}

Solution rmigg_both_extremes(const Graph& g, const IncompleteGreyscale& fixed) {
  require_connected(g);
  require_prefix_in_range(g, fixed);
  if (classify(fixed) != ProblemKind::kBothExtremes) {
    throw InvalidInput("prefixed tones must attain both 0 and 1");
  }
  CcmResult r = ccm(g, fixed);
  Solution s{std::move(r.mapping), {}, std::move(r.trace), {}};
  s.vector = gradation_vector(g, s.greyscale);
  return s;
}

SolutionSet rmigg_one_extreme(const Graph& g, const IncompleteGreyscale& fixed,
                              const SolveOptions& options) {
  require_connected(g);
  require_prefix_in_range(g, fixed);
  if (classify(fixed) != ProblemKind::kOneExtreme) {
    throw InvalidInput("prefixed tones must attain exactly one extreme");
  }
  const bool missing_one = has_tone(fixed, false);
  const auto free = free_vertices(g, fixed);
  if (free.empty()) throw InvalidInput("no free vertex for the missing extreme");

  std::vector<Candidate> candidates;
  for (Vertex w : free) {
    Candidate c{fixed, {}};
    if (missing_one) {
      c.fixed[w] = Tone::one();
      c.anchor.one = w;
    } else {
      c.fixed[w] = Tone::zero();
      c.anchor.zero = w;
    }
    candidates.push_back(std::move(c));
  }
  return select_minimum(g, candidates, options, false);
}

SolutionSet rmigg_no_extreme(const Graph& g, const IncompleteGreyscale& fixed,
                             const SolveOptions& options) {
  require_connected(g);
  require_prefix_in_range(g, fixed);
  if (classify(fixed) != ProblemKind::kNoExtreme) {
    throw InvalidInput("prefixed tones must attain neither extreme");
  }
  const auto free = free_vertices(g, fixed);
  if (free.size() < 2) throw InvalidInput("fewer than two free vertices");

  // Orientation matters once other tones are prefixed, so pairs are ordered.
  std::vector<Candidate> candidates;
  for (Vertex w0 : free) {
    for (Vertex w1 : free) {
      if (w0 == w1) continue;
      Candidate c{fixed, {w0, w1}};
      c.fixed[w0] = Tone::zero();
      c.fixed[w1] = Tone::one();
      candidates.push_back(std::move(c));
    }
  }
  return select_minimum(g, candidates, options, false);
}

SolutionSet migg(const Graph& g, const SolveOptions& options) {
  if (g.vertex_count() < 2) {
    throw InvalidInput("a greyscale needs at least two vertices");
  }
  require_connected(g);

  std::vector<Edge> pairs;
  if (options.restrict_antipodal) {
    const auto d = thread_count(options) == 1 ? all_pairs_distances_serial(g)
                                              : all_pairs_distances(g);
    pairs = diameter_and_antipodal_pairs(g, d).antipodal_pairs;
  } else {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = u + 1; v < g.vertex_count(); ++v) pairs.emplace_back(u, v);
    }
  }
  // Swapping 0 and 1 yields the complement, so one orientation per pair.
  std::vector<Candidate> candidates;
  candidates.reserve(pairs.size());
  for (const Edge& p : pairs) {
    candidates.push_back(
        {{{p.u, Tone::zero()}, {p.v, Tone::one()}}, {p.u, p.v}});
  }
  return select_minimum(g, candidates, options, true);
}

SolutionSet solve(const Graph& g, const IncompleteGreyscale& fixed,
                  const SolveOptions& options) {
  switch (classify(fixed)) {
    case ProblemKind::kMigg:
      return migg(g, options);
    case ProblemKind::kBothExtremes: {
      SolutionSet set;
      set.solutions.push_back(rmigg_both_extremes(g, fixed));
      set.vector = set.solutions.front().vector;
      set.stats.candidates = 1;
      return set;
    }
    case ProblemKind::kOneExtreme:
      return rmigg_one_extreme(g, fixed, options);
    case ProblemKind::kNoExtreme:
      return rmigg_no_extreme(g, fixed, options);
  }
  throw InvalidInput("unknown problem kind");
}

std::vector<Solution> dedupe_complementary(std::vector<Solution> solutions) {
  std::vector<Solution> unique;
  for (auto& s : solutions) {
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const Solution& u) {
      return u.greyscale == s.greyscale;
    });
    if (!seen) unique.push_back(std::move(s));
  }
  std::vector<bool> keep(unique.size(), true);
  for (std::size_t i = 0; i < unique.size(); ++i) {
    const Greyscale flipped = complement(unique[i].greyscale);
    keep[i] = !(flipped < unique[i].greyscale &&
                std::any_of(unique.begin(), unique.end(), [&](const Solution& u) {
                  return u.greyscale == flipped;
                }));
  }
  std::vector<Solution> kept;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    if (keep[i]) kept.push_back(std::move(unique[i]));
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Solution& a, const Solution& b) {
    return a.greyscale < b.greyscale;
  });
  return kept;
}

bool dominates(const PruneView& a, const PruneView& b) {
  const std::size_t common = std::min(a.settled.size(), b.settled.size());
  for (std::size_t j = 0; j < common; ++j) {
    if (a.settled[j] != b.settled[j]) return a.settled[j] < b.settled[j];
  }
  // a's next component is below its ceiling while b's is already settled.
  return a.settled.size() < b.settled.size() && a.ceiling &&
         *a.ceiling <= b.settled[a.settled.size()];
}

std::vector<std::size_t> prune_candidates(std::span<const PruneView> views) {
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < views.size(); ++i) {
    bool beaten = false;
    for (std::size_t j = 0; j < views.size() && !beaten; ++j) {
      beaten = j != i && dominates(views[j], views[i]);
    }
    if (!beaten) survivors.push_back(i);
  }
  return survivors;
}

}  // namespace gradation
