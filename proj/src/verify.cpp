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

#include "gradation/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "gradation/error.hpp"
#include "gradation/generators.hpp"
#include "gradation/oracle.hpp"

namespace gradation {
namespace {

std::string tones_text(std::span<const Tone> tones) {
  std::string out = "(";
  for (std::size_t i = 0; i < tones.size(); ++i) {
    if (i) out += ",";
    out += tones[i].str();
  }
  return out + ")";
}

std::string pair_text(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

// Collects the first violation of a named property.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void fail(const std::string& witness) {
    if (!witness_) witness_ = witness;
    ++failures_;
  }
  void into(VerificationReport& report) const {
    if (!witness_) {
      report.add(name_, true);
    } else {
      report.add(name_, false,
                 *witness_ + " (" + std::to_string(failures_) + " violations)");
    }
  }

 private:
  std::string name_;
  std::optional<std::string> witness_;
  std::size_t failures_ = 0;
};

mpq_class colour_at(const Tone& start, std::size_t steps, const Tone& slope) {
  return start.value() +
         mpq_class(static_cast<unsigned long>(steps)) * slope.value();
}

}  // namespace

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

void VerificationReport::add(std::string name, bool pass,
                             std::optional<std::string> witness) {
  checks.push_back({std::move(name), pass, std::move(witness), false});
}

void VerificationReport::append(const VerificationReport& other,
                                const std::string& prefix) {
  for (Check c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport check_solution(const Graph& g,
                                  const IncompleteGreyscale& fixed,
                                  const Solution& s) {
  VerificationReport report;
  const Greyscale& f = s.greyscale;

  const Validity validity = is_valid_greyscale(g, f);
  report.add("valid_greyscale", validity.valid,
             validity.valid ? std::nullopt : std::optional(validity.reason));
  if (f.size() != g.vertex_count()) return report;

  {
    Tally t("compatible");
    for (const auto& [v, tone] : fixed) {
      if (v >= f.size() || f[v] != tone) {
        t.fail("vertex " + std::to_string(v) + " prefixed " + tone.str());
      }
    }
    t.into(report);
  }

  const GradationVector recomputed = gradation_vector(g, f);
  report.add("vector_recomputed", recomputed == s.vector,
             recomputed == s.vector
                 ? std::nullopt
                 : std::optional("stored " + tones_text(s.vector.components()) +
                                 " recomputed " +
                                 tones_text(recomputed.components())));

  {
    Tally t("trace_strict_decrease");
    const auto& its = s.trace.iterations;
    for (std::size_t i = 1; i < its.size(); ++i) {
      if (!(its[i].max_increase < its[i - 1].max_increase)) {
        t.fail("M_" + std::to_string(i + 1) + "=" + its[i].max_increase.str() +
               " >= M_" + std::to_string(i) + "=" +
               its[i - 1].max_increase.str());
      }
    }
    t.into(report);
  }

  // Replay on the recorded sequence of graphs.
  Tally colouring("trace_colouring");
  std::vector<bool> covered(g.vertex_count(), false);
  for (const auto& [v, tone] : fixed) {
    if (v < covered.size()) covered[v] = true;
  }
  for (const auto& anchor : {s.anchor.zero, s.anchor.one}) {
    if (anchor && *anchor < covered.size()) covered[*anchor] = true;
  }
  Graph current = g;
  for (const auto& it : s.trace.iterations) {
    const std::string at = "iteration " + std::to_string(it.index) + ": ";
    const DistanceMatrix d = all_pairs_distances_serial(current);
    std::vector<bool> in_a(g.vertex_count(), false);
    for (const auto& c : it.coloured) {
      if (c.vertex >= f.size() || f[c.vertex] != c.tone) {
        colouring.fail(at + "vertex " + std::to_string(c.vertex) +
                       " traced as " + c.tone.str());
        continue;
      }
      in_a[c.vertex] = true;
      covered[c.vertex] = true;
    }
    for (const Edge& p : it.maximizing_pairs) {
      if (!d.reachable(p.u, p.v)) {
        colouring.fail(at + "pair " + pair_text(p.u, p.v) + " unreachable");
        continue;
      }
      if (edge_colour_increase(f, d, p.u, p.v) != it.max_increase) {
        colouring.fail(at + "pair " + pair_text(p.u, p.v) +
                       " does not attain M=" + it.max_increase.str());
      }
      const Vertex low = f[p.u] <= f[p.v] ? p.u : p.v;
      for (Vertex w : geodesic_interval(d, p.u, p.v)) {
        const mpq_class expected =
            colour_at(f[low], d.hops(w, low), it.max_increase);
        if (cmp(f[w].value(), expected) != 0 || !in_a[w]) {
          colouring.fail(at + "vertex " + std::to_string(w) + " has tone " +
                         f[w].str() + ", expected " + expected.get_str());
        }
      }
    }
    std::vector<Vertex> a_set;
    std::set<Edge> inside;
    for (Vertex w = 0; w < in_a.size(); ++w) {
      if (in_a[w]) a_set.push_back(w);
    }
    for (const Edge& e : current.edges()) {
      if (in_a[e.u] && in_a[e.v]) inside.insert(e);
    }
    std::set<Edge> traced;
    for (const auto& se : it.saturated) traced.insert(se.edge);
    if (traced != inside) {
      colouring.fail(at + "saturated edges differ from the edges inside A");
    }
    current = delete_saturated_edges(current, a_set).graph;
  }
  std::vector<std::optional<std::size_t>> filled_in(g.vertex_count());
  if (s.trace.flood_fill) {
    for (std::size_t k = 0; k < s.trace.flood_fill->size(); ++k) {
      const auto& fill = (*s.trace.flood_fill)[k];
      for (Vertex w : fill.component) {
        if (w >= f.size() || fill.anchor >= f.size() || f[w] != f[fill.anchor]) {
          colouring.fail("flood fill: vertex " + std::to_string(w) +
                         " differs from anchor " + std::to_string(fill.anchor));
        } else {
          covered[w] = true;
          filled_in[w] = k;
        }
      }
    }
  }
  colouring.into(report);

  Tally coverage("trace_coverage");
  const auto missing = std::find(covered.begin(), covered.end(), false);
  if (missing != covered.end()) {
    coverage.fail("vertex " + std::to_string(missing - covered.begin()) +
                  " never coloured");
  }
  // Edges left after the last iteration must sit inside one filled component.
  for (const Edge& e : current.edges()) {
    if (!filled_in[e.u] || filled_in[e.u] != filled_in[e.v]) {
      coverage.fail("edge " + pair_text(e.u, e.v) + " never saturated");
    }
  }
  coverage.into(report);
  return report;
}

VerificationReport check_vector_shape(const CcmTrace& trace,
                                      const GradationVector& v) {
  std::set<Tone> maxima;
  for (const auto& it : trace.iterations) maxima.insert(it.max_increase);
  std::vector<Tone> stray;
  bool broken = false;
  for (const Tone& t : v.components()) {
    if (t.is_zero() || maxima.contains(t)) continue;
    if (maxima.empty() || t > *maxima.rbegin()) broken = true;
    if (stray.empty() || stray.back() != t) stray.push_back(t);
  }
  VerificationReport report;
  if (stray.empty()) {
    report.add("vector_shape", true);
    return report;
  }
  std::vector<Tone> m(maxima.rbegin(), maxima.rend());
  const std::string witness = "components " + tones_text(stray) +
                              " not among maxima " + tones_text(m);
  if (broken) {
    report.add("vector_shape", false, witness);
  } else {
    report.checks.push_back({"vector_shape", true, witness, false, true});
  }
  return report;
}

bool check_antipodal_extremes(const Graph& g, const Greyscale& f) {
  const DistanceMatrix d = all_pairs_distances(g);
  const std::size_t diam = diameter_and_antipodal_pairs(g, d).length;
  for (Vertex u = 0; u < f.size(); ++u) {
    if (!f[u].is_zero()) continue;
    for (Vertex v = 0; v < f.size(); ++v) {
      if (f[v].is_one() && d.hops(u, v) != diam) return false;
    }
  }
  return true;
}

bool check_diameter_prefix(const Graph& g, const GradationVector& v) {
  const DistanceMatrix d = all_pairs_distances(g);
  const std::size_t diam = diameter_and_antipodal_pairs(g, d).length;
  if (diam == 0 || v.size() < diam) return false;
  const Tone expected(1, static_cast<std::int64_t>(diam));
  for (std::size_t i = 0; i < diam; ++i) {
    if (v[i] != expected) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> enumerate_geodesics(const Graph& g,
                                                     const DistanceMatrix& d,
                                                     Vertex u, Vertex v,
                                                     std::size_t limit) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{u};
  std::function<void(Vertex)> walk = [&](Vertex x) {
    if (out.size() >= limit) return;
    if (x == v) {
      out.push_back(path);
      return;
    }
    const std::size_t left = d.hops(x, v);
    for (Vertex y : g.neighbours(x)) {
      if (d.hops(y, v) + 1 == left) {
        path.push_back(y);
        walk(y);
        path.pop_back();
      }
    }
  };
  d.hops(u, v);
  walk(u);
  return out;
}

VerificationReport run_lemma_suite(const Graph& g, std::size_t trials,
                                   std::uint64_t seed,
                                   const LemmaSuiteOptions& options) {
  VerificationReport report;
  const DistanceMatrix d = all_pairs_distances(g);
  const Diameter diam = diameter_and_antipodal_pairs(g, d);
  const auto n = static_cast<Vertex>(g.vertex_count());

  {
    Tally components("support_greyscale_components");
    Tally prefix("support_greyscale_prefix");
    const Tone top(1, static_cast<std::int64_t>(diam.length));
    const Tone half(1, static_cast<std::int64_t>(2 * diam.length));
    for (const Edge& p : diam.antipodal_pairs) {
      const Greyscale sg = support_greyscale(g, d, p.u, p.v);
      const GradationVector gv = gradation_vector(g, sg);
      for (const Tone& t : gv.components()) {
        if (t != top && t != half && !t.is_zero()) {
          components.fail("pair " + pair_text(p.u, p.v) + " edge tone " +
                          t.str());
          break;
        }
      }
      if (!check_diameter_prefix(g, gv)) {
        prefix.fail("pair " + pair_text(p.u, p.v) + " vector " +
                    tones_text(gv.components()));
      }
    }
    components.into(report);
    prefix.into(report);
  }

  // Geodesics depend only on the graph.
  std::vector<std::vector<std::vector<std::vector<Vertex>>>> geodesics(n);
  for (Vertex u = 0; u < n; ++u) {
    geodesics[u].resize(n);
    for (Vertex v = u + 1; v < n; ++v) {
      geodesics[u][v] = enumerate_geodesics(g, d, u, v);
    }
  }

  Tally tech("lemma_three_point");
  Tally lowerb("geodesic_lower_bound");
  Tally eq_edges("geodesic_equality");
  Tally max_vertex("maximizing_pair_vertices");
  Tally max_edge("maximizing_pair_edges");
  Tally complement_inv("complement_invariance");
  Tally total_order("compare_lex_total_order");

  std::mt19937_64 rng(seed);
  std::vector<GradationVector> recent;
  const auto& F = options.increase;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Greyscale f = random_greyscale(n, rng);
    const std::string at = "trial " + std::to_string(trial) + ": ";

    const GradationVector gv = gradation_vector(g, f);
    if (gradation_vector(g, complement(f)) != gv) {
      complement_inv.fail(at + "complement changes the vector");
    }
    recent.push_back(gv);
    if (recent.size() >= 3) {
      const auto& a = recent[recent.size() - 3];
      const auto& b = recent[recent.size() - 2];
      const auto& c = recent[recent.size() - 1];
      const auto ab = compare_lex(a, b);
      const auto ba = compare_lex(b, a);
      const bool antisymmetric =
          (ab == LexOrder::kLess) == (ba == LexOrder::kGreater) &&
          (ab == LexOrder::kEqual) == (ba == LexOrder::kEqual);
      const auto bc = compare_lex(b, c);
      const auto ac = compare_lex(a, c);
      const bool transitive =
          !(ab != LexOrder::kGreater && bc != LexOrder::kGreater) ||
          ac != LexOrder::kGreater;
      if (!antisymmetric || !transitive) {
        total_order.fail(at + "inconsistent comparison");
      }
    }

    Tone global_max;
    std::vector<Edge> maximizers;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const Tone fuv = F(f, d, u, v);
        if (maximizers.empty() || fuv > global_max) {
          global_max = fuv;
          maximizers.clear();
        }
        if (fuv == global_max) maximizers.emplace_back(u, v);

        const Tone lo = std::min(f[u], f[v]);
        const Tone hi = std::max(f[u], f[v]);
        for (Vertex w : geodesic_interval(d, u, v)) {
          if (w == u || w == v) continue;
          const Tone fuw = F(f, d, u, w);
          const Tone fwv = F(f, d, w, v);
          const bool all_equal = fuv == fuw && fuw == fwv;
          if (!(fuv < std::max(fuw, fwv)) && !all_equal) {
            tech.fail(at + "u=" + std::to_string(u) + " v=" +
                      std::to_string(v) + " w=" + std::to_string(w));
          } else if (all_equal && (f[w] < lo || hi < f[w])) {
            tech.fail(at + "equality with f(w) outside [f(u),f(v)] at w=" +
                      std::to_string(w));
          }
        }

        for (const auto& path : geodesics[u][v]) {
          Tone top;
          for (std::size_t k = 1; k < path.size(); ++k) {
            top = std::max(top, abs_diff(f[path[k - 1]], f[path[k]]));
          }
          if (top < fuv) {
            lowerb.fail(at + "pair " + pair_text(u, v) + " F=" + fuv.str() +
                        " above geodesic max " + top.str());
          }
          if (top == fuv) {
            for (std::size_t k = 1; k < path.size(); ++k) {
              if (abs_diff(f[path[k - 1]], f[path[k]]) != fuv) {
                eq_edges.fail(at + "pair " + pair_text(u, v) +
                              " edge tone differs from F=" + fuv.str());
                break;
              }
            }
          }
        }
      }
    }

    for (const Edge& p : maximizers) {
      const Vertex low = f[p.u] <= f[p.v] ? p.u : p.v;
      for (const auto& path : geodesics[p.u][p.v]) {
        for (std::size_t k = 0; k < path.size(); ++k) {
          const mpq_class expected =
              colour_at(f[low], d.hops(low, path[k]), global_max);
          if (cmp(f[path[k]].value(), expected) != 0) {
            max_vertex.fail(at + "pair " + pair_text(p.u, p.v) + " vertex " +
                            std::to_string(path[k]));
            break;
          }
          if (k > 0 && abs_diff(f[path[k - 1]], f[path[k]]) != global_max) {
            max_edge.fail(at + "pair " + pair_text(p.u, p.v) + " edge " +
                          pair_text(path[k - 1], path[k]));
          }
        }
      }
    }
  }

  for (const Tally* t : {&tech, &lowerb, &eq_edges, &max_vertex, &max_edge,
                         &complement_inv, &total_order}) {
    t->into(report);
  }
  return report;
}

VerificationReport verify_solution_set(const Graph& g,
                                       const IncompleteGreyscale& fixed,
                                       const SolutionSet& set,
                                       const VerifyOptions& options) {
  VerificationReport report;
  const bool is_migg = fixed.empty();
  for (std::size_t i = 0; i < set.solutions.size(); ++i) {
    const Solution& s = set.solutions[i];
    const std::string prefix = "solution[" + std::to_string(i) + "].";
    report.append(check_solution(g, fixed, s), prefix);
    report.append(check_vector_shape(s.trace, s.vector), prefix);
    report.add(prefix + "same_vector", s.vector == set.vector);
    if (is_migg) {
      report.add(prefix + "antipodal_extremes",
                 check_antipodal_extremes(g, s.greyscale));
    }
  }
  if (is_migg) {
    report.add("diameter_prefix", check_diameter_prefix(g, set.vector));
  }
  report.append(run_lemma_suite(g, options.trials, options.seed), "lemma.");

  const std::int64_t L = options.oracle_denominator;
  std::vector<Tone> prefixed;
  for (const auto& [v, tone] : fixed) prefixed.push_back(tone);
  if (!on_grid(Greyscale(std::move(prefixed)), L)) {
    report.checks.push_back({"oracle_agreement", true,
                             "skipped: prefixed tones are off the 1/" +
                                 std::to_string(L) + " grid",
                             true});
    return report;
  }
  try {
    OracleOptions oo{options.oracle_max_free, options.oracle_budget,
                     options.jobs};
    const GradationVector grid_best =
        brute_force_min_gradation(g, fixed, L, oo);
    const bool on = std::all_of(
        set.solutions.begin(), set.solutions.end(),
        [&](const Solution& s) { return on_grid(s.greyscale, L); });
    const LexOrder order = compare_lex(set.vector, grid_best);
    const bool pass = on ? order == LexOrder::kEqual : order != LexOrder::kGreater;
    report.add("oracle_agreement", pass,
               pass ? std::nullopt
                    : std::optional("solver " +
                                    tones_text(set.vector.components()) +
                                    " oracle " +
                                    tones_text(grid_best.components())));
  } catch (const OracleBudgetExceeded& e) {
    report.checks.push_back(
        {"oracle_agreement", true, std::string("skipped: ") + e.what(), true});
  }
  return report;
}

}  // namespace gradation
