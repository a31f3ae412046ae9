#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lingrowth/constructions.hpp"
#include "lingrowth/decomposition.hpp"
#include "lingrowth/generators.hpp"
#include "lingrowth/growth.hpp"
#include "lingrowth/json_io.hpp"
#include "lingrowth/rational.hpp"
#include "lingrowth/separators.hpp"
#include "lingrowth/stack_layout.hpp"
#include "lingrowth/treewidth.hpp"

namespace lingrowth {

struct corpus_entry {
  std::string name;
  graph g;
  std::optional<int> grid_side;
};

// Paths, cycles, grids, random trees, random cubic graphs and strong products
// of paths at sizes where every check below is exact.
inline std::vector<corpus_entry> default_corpus() {
  std::vector<corpus_entry> out;
  for (int n : {2, 10, 50, 300, 2000}) out.push_back({"path(" + std::to_string(n) + ")", path_graph(n), {}});
  for (int n : {3, 10, 50, 300, 2000}) out.push_back({"cycle(" + std::to_string(n) + ")", cycle_graph(n), {}});
  for (int n : {2, 3, 4, 5, 6, 10, 20}) out.push_back({"grid(" + std::to_string(n) + ")", grid_graph(n), n});
  for (int n : {10, 100, 2000})
    for (std::uint64_t seed : {1, 2})
      out.push_back({"random_tree(" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")", random_tree(n, seed), {}});
  for (int n : {10, 18, 100, 500})
    for (std::uint64_t seed : {1, 2})
      out.push_back({"random_cubic(" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")", random_cubic(n, seed), {}});
  for (int n : {3, 6, 12}) out.push_back({"P" + std::to_string(n) + "^2", path_product(n, 2), {}});
  for (int n : {3, 5, 6}) out.push_back({"P" + std::to_string(n) + "^3", path_product(n, 3), {}});
  return out;
}

enum class suite { l2_2, l2_4, t1_1, t1_2, t3_1, t5, all };

inline suite parse_suite(const std::string& name) {
  if (name == "l2.2") return suite::l2_2;
  if (name == "l2.4") return suite::l2_4;
  if (name == "t1.1") return suite::t1_1;
  if (name == "t1.2") return suite::t1_2;
  if (name == "t3.1") return suite::t3_1;
  if (name == "t5") return suite::t5;
  if (name == "all") return suite::all;
  throw parse_error("unknown suite '" + name + "' (expected l2.2, l2.4, t1.1, t1.2, t3.1, t5 or all)");
}

struct theorem_report {
  std::string theorem;
  std::string entry;
  json measured = json::object();
  std::string bound;  // exact rational, or a formula for per-radius bounds
  bool pass = false;
  std::string note;

  json to_json() const {
    json out = {{"theorem", theorem}, {"entry", entry}, {"measured", measured},
                {"bound", bound},     {"verdict", pass ? "pass" : "fail"}};
    if (!note.empty()) out["note"] = note;
    return out;
  }
};

// ⌊49c² + 30c⌋
inline big_int treewidth_bound(const rational& c) { return floor_of(49 * c * c + 30 * c); }

namespace detail {

inline bool wanted(suite selected, suite s) { return selected == suite::all || selected == s; }

// Connected vertex sets on which the BFS-layer separation is exercised: each
// component, a few balls, and the first side of the top-level split.
inline std::vector<vertex_set> separation_probes(const graph& g, const rational& c) {
  std::vector<vertex_set> probes;
  for (auto& comp : components(g))
    if (comp.size() >= 2) probes.push_back(comp);
  const int n = g.vertex_count();
  for (vertex v : {0, n / 2, n - 1}) {
    for (int r : {1, 2, 3, 5, 8, 13}) {
      auto b = ball(g, v, r);
      if (b.size() >= 2) probes.push_back(std::move(b));
    }
  }
  if (!probes.empty()) {
    auto top = bfs_layer_separation(g, probes.front(), c).first;
    if (top.a.size() >= 2) probes.push_back(top.a);
  }
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  return probes;
}

inline void run_lemma_2_4(const corpus_entry& e, const rational& c, std::vector<theorem_report>& out) {
  const auto& g = e.g;
  int checked = 0, worst_order = 0;
  rational worst_side = 0;
  std::string failure;
  for (const auto& x : separation_probes(g, c)) {
    const auto [sep, trace] = bfs_layer_separation(g, x, c);
    const auto report = check_separation(g, x, sep, 1);
    const auto n = static_cast<std::int64_t>(x.size());
    const rational side_fraction = rational(std::max(report.a_only, report.b_only), n);
    ++checked;
    worst_order = std::max(worst_order, report.order);
    worst_side = std::max(worst_side, side_fraction);
    if (failure.empty()) {
      if (!report.valid) failure = "invalid separation: " + report.failure;
      else if (rational(report.order) >= 2 * c) failure = "order " + std::to_string(report.order) + " >= 2c";
      else if (side_fraction > 1 - 1 / (4 * c)) failure = "exclusive side " + to_string(side_fraction) + " > 1 - 1/(4c)";
      else if (2 * trace.thick.size() > static_cast<std::size_t>(trace.p)) failure = "|R| > p/2";
      else if (trace.thin_set_empty) failure = "no thin layer";
    }
  }
  theorem_report r;
  r.theorem = "L2.4";
  r.entry = e.name;
  r.measured = {{"c", to_string(c)}, {"subgraphs", checked}, {"max_order", worst_order},
                {"max_exclusive_fraction", to_string(worst_side)}};
  r.bound = "order < " + to_string(2 * c) + ", exclusive side <= " + to_string(1 - 1 / (4 * c)) + " n, |R| <= p/2";
  r.pass = failure.empty();
  r.note = failure;
  out.push_back(std::move(r));
}

inline void run_lemma_2_2(const corpus_entry& e, const rational& c, std::vector<theorem_report>& out) {
  const auto& g = e.g;
  const rational alpha = 1 - 1 / (4 * c);
  const int cap = rebalance_round_cap(alpha);
  const auto connected = layer_oracle(g, c);
  int oracle_max = 0;
  const separation_oracle lifted = [&](const vertex_set& x) {
    return separate_possibly_disconnected(g, x, alpha, [&](const vertex_set& comp) {
      auto s = connected(comp);
      oracle_max = std::max(oracle_max, s.order());
      return s;
    });
  };
  const auto everything = all_vertices(g);
  const auto result = rebalance_to_two_thirds(g, everything, alpha, lifted);
  const auto report = check_separation(g, everything, result.sep, rational(2, 3));
  theorem_report r;
  r.theorem = "L2.2";
  r.entry = e.name;
  r.measured = {{"alpha", to_string(alpha)}, {"iterations", result.iterations}, {"order", report.order},
                {"max_step_order", result.max_step_order}};
  r.bound = "iterations <= " + std::to_string(cap) + ", order <= iterations * max step order";
  r.pass = report.valid && report.within_alpha && result.iterations <= cap &&
           report.order <= result.iterations * result.max_step_order;
  if (!r.pass) r.note = report.valid ? "balance or order bound violated" : report.failure;
  out.push_back(std::move(r));

  // The component-peeling lift on its own: remove the top separator so the
  // rest falls apart, then check order against the largest oracle call.
  if (g.vertex_count() >= 3) {
    const auto top = lifted(everything);
    const auto rest = set_difference(everything, top.separator());
    if (!rest.empty()) {
      oracle_max = 0;
      const auto sep = lifted(rest);
      const auto rep = check_separation(g, rest, sep, alpha);
      theorem_report l;
      l.theorem = "L2.3";
      l.entry = e.name;
      l.measured = {{"components", components(g, rest).size()}, {"order", rep.order},
                    {"max_oracle_order", oracle_max}, {"exclusive_fraction", to_string(rep.exclusive_alpha)}};
      l.bound = "order <= max oracle order, exclusive side <= " + to_string(alpha) + " n";
      l.pass = rep.valid && rep.within_alpha && rep.order <= oracle_max;
      if (!l.pass) l.note = rep.valid ? "balance or order bound violated" : rep.failure;
      out.push_back(std::move(l));
    }
  }
}

inline void run_theorem_1_1_and_1_2(const corpus_entry& e, const rational& c, suite selected,
                                    std::vector<theorem_report>& out) {
  const auto td = build_tree_decomposition(e.g, c);
  const auto report = check_tree_decomposition(e.g, td);
  const big_int bound = treewidth_bound(c);
  if (wanted(selected, suite::t1_1)) {
    theorem_report r;
    r.theorem = "T1.1";
    r.entry = e.name;
    r.measured = {{"c", to_string(c)}, {"width", report.width}, {"nodes", td.node_count()}};
    r.bound = bound.str();
    r.pass = report.valid && report.width <= bound;
    r.note = report.valid ? "corpus instance; the theorem itself is universal" : report.first_failure;
    if (e.g.vertex_count() <= exact_treewidth_default_limit) {
      // a width below the treewidth would mean the builder or checker is broken
      const int tw = exact_treewidth(e.g).width;
      r.measured["treewidth"] = tw;
      if (report.width < tw) {
        r.pass = false;
        r.note = "width below exact treewidth";
      }
    }
    out.push_back(std::move(r));
  }
  if (wanted(selected, suite::t1_2)) {
    const auto layout = layout_from_decomposition(e.g, td);
    const auto verdict = check_stack_layout(e.g, layout);
    theorem_report r;
    r.theorem = "T1.2";
    r.entry = e.name;
    r.measured = {{"c", to_string(c)}, {"stacks", layout.k}};
    r.bound = big_int(bound + 1).str();
    r.pass = verdict.valid && layout.k <= bound + 1;
    if (!verdict.valid) r.note = "layout has a same-stack crossing";
    out.push_back(std::move(r));
  }
}

inline void run_theorem_3_1(const corpus_entry& e, const rational& c, std::vector<theorem_report>& out) {
  if (!e.grid_side || *e.grid_side > 6) return;
  const int n = *e.grid_side;
  const auto verdict = verify_grid_minor_model(e.g, identity_grid_model(n));
  const big_int side = ceil_of(2 * c);
  theorem_report r;
  r.theorem = "T3.1";
  r.entry = e.name;
  r.measured = {{"c", to_string(c)}, {"identity_model_valid", verdict.valid}, {"ceil_2c", side.str()}};
  r.bound = "ceil(2c) > " + std::to_string(n);
  r.pass = verdict.valid && side > n;
  r.note = verdict.first_failure;
  out.push_back(std::move(r));
  if (n <= 4) {
    const int tw = exact_treewidth(e.g).width;
    theorem_report p;
    p.theorem = "C3.3";
    p.entry = e.name;
    p.measured = {{"c", to_string(c)}, {"treewidth", tw}};
    p.bound = to_string(12 * c + 1);
    p.pass = rational(tw) <= 12 * c + 1;
    out.push_back(std::move(p));
  }
}

inline theorem_report growth_certificate(std::string theorem, std::string entry, const graph& result,
                                         const polynomial_bound& bound) {
  const auto verdict = verify_growth_bound(result, bound);
  theorem_report r;
  r.theorem = std::move(theorem);
  r.entry = std::move(entry);
  r.measured = {{"vertices", result.vertex_count()}};
  if (verdict.first_violation) {
    r.measured["violation_r"] = verdict.first_violation->r;
    r.measured["violation_f"] = verdict.first_violation->f;
  }
  r.bound = "f(r) <= " + bound.to_string() + " for r in [1, " + std::to_string(result.vertex_count()) + "]";
  r.pass = verdict.holds;
  return r;
}

// Host subdivision of g: a tree rooted at its central vertex hosts itself
// when the result stays small enough to re-verify exhaustively; otherwise g
// sits in one node.
inline constexpr std::int64_t harness_tree_host_budget = 5000;

inline subdivision_record host_subdivision(const graph& g, const rational& eps, host_embedding& emb) {
  if (is_tree(g)) {
    emb = tree_self_embedding(g, central_layering(g, all_vertices(g)).center);
    try {
      return subdivide_in_host(g, emb, eps, harness_tree_host_budget);
    } catch (const capacity_error&) {
    }
  }
  emb = single_node_embedding(g);
  return subdivide_in_host(g, emb, eps);
}

// Subdivision certificates for one small graph.
inline void run_subdivisions(const corpus_entry& e, std::vector<theorem_report>& out) {
  const auto& g = e.g;
  if (g.edge_count() == 0 || g.vertex_count() > 12) return;
  const int delta = g.max_degree();

  // Uniform subdivision for f(r) = r² + Δr + 1.
  {
    const polynomial_bound f{{1, delta, 1}};
    const auto rec = subdivide_uniform_superlinear(g, f, true);
    auto r = growth_certificate("T5.4", e.name, rec.result, f);
    r.measured["ell"] = rec.uniform->ell;
    out.push_back(std::move(r));
  }

  const int tw = exact_treewidth(g).width;
  const rational eps = 1;
  host_embedding emb;
  const auto rec = host_subdivision(g, eps, emb);
  {
    auto r = growth_certificate("L5.1", e.name, rec.result, linear_bound(rational(emb.k * delta) + eps, 1));
    r.measured["k"] = emb.k;
    r.measured["delta"] = delta;
    out.push_back(std::move(r));
  }
  {
    const int k = tw + 1;  // treewidth < k
    auto r = growth_certificate("T5.2", e.name, rec.result, linear_bound(rational(18 * k * delta * delta) + eps, 1));
    r.measured["treewidth"] = tw;
    out.push_back(std::move(r));
  }
  // Minor route: degree-3 expansion, then a host subdivision of the expansion.
  {
    const auto expansion = expand_to_degree3(g);
    const auto& h = expansion.result;
    host_embedding h_emb;
    const auto h_rec = host_subdivision(h, eps, h_emb);
    const int k = tw + 1;
    auto r = growth_certificate("C5.3", e.name, h_rec.result, linear_bound(rational(162 * (k + 1)) + eps, 1));
    const bool minor_ok = contract_minor_map(h, expansion.minor_map) == g;
    r.measured["treewidth"] = tw;
    r.measured["expanded_vertices"] = h.vertex_count();
    r.pass = r.pass && minor_ok;
    if (!minor_ok) r.note = "contraction does not recover the graph";
    out.push_back(std::move(r));
  }
}

inline void run_product_structure(const corpus_entry& e, const rational& c, std::vector<theorem_report>& out) {
  if (!is_connected(e.g)) return;
  const auto emb = layering_embedding(e.g);
  const auto verdict = check_product_embedding(e.g, emb);
  const big_int bound = floor_of(882 * c * c * c);
  theorem_report r;
  r.theorem = "T4.2";
  r.entry = e.name;
  r.measured = {{"c", to_string(c)}, {"k", emb.k}, {"tree_nodes", emb.host_tree.vertex_count()}};
  r.bound = "k <= " + bound.str();
  r.pass = verdict.valid && emb.k <= bound;
  r.note = "BFS-layer embedding into a path blow-up";
  if (!verdict.valid) r.note = verdict.first_failure;
  out.push_back(std::move(r));
}

}  // namespace detail

// Runs the selected checks on each entry in corpus order. A failing check is a
// report with pass = false; exceptions from the library propagate.
inline std::vector<theorem_report> run_theorem_suite(const std::vector<corpus_entry>& corpus, suite selected) {
  std::vector<theorem_report> out;
  for (const auto& e : corpus) {
    if (e.g.empty()) continue;
    const rational c = growth_constant(e.g);
    if (detail::wanted(selected, suite::l2_4)) detail::run_lemma_2_4(e, c, out);
    if (detail::wanted(selected, suite::l2_2)) detail::run_lemma_2_2(e, c, out);
    if (detail::wanted(selected, suite::t1_1) || detail::wanted(selected, suite::t1_2))
      detail::run_theorem_1_1_and_1_2(e, c, selected, out);
    if (detail::wanted(selected, suite::t3_1)) detail::run_theorem_3_1(e, c, out);
    if (detail::wanted(selected, suite::t5)) {
      detail::run_product_structure(e, c, out);
      detail::run_subdivisions(e, out);
    }
  }
  if (detail::wanted(selected, suite::t5)) {
    // Fixed instance: K_4 with f(r) = r² + 3r + 1.
    const polynomial_bound f{{1, 3, 1}};
    const auto rec = subdivide_uniform_superlinear(complete_graph(4), f, true);
    auto r = detail::growth_certificate("T5.4", "complete(4), f = r^2+3r+1", rec.result, f);
    r.measured["ell"] = rec.uniform->ell;
    r.pass = r.pass && rec.uniform->ell == 10 && rec.result.vertex_count() == 124;
    out.push_back(std::move(r));
  }
  return out;
}

struct exploration_row {
  int n = 0;
  std::uint64_t seed = 0;
  rational growth_constant;
  int treewidth = 0;
  // max_r min(n, 3·2^r - 2)/r: the ball-size ceiling for cubic graphs.
  rational cubic_ball_ceiling;
  bool ball_bound_holds = false;  // f(r) <= min(n, 3·2^r - 2) for every r
  bool within_four = false;       // c_G <= 4

  json to_json() const {
    return {{"n", n},
            {"seed", seed},
            {"c", lingrowth::to_string(growth_constant)},
            {"treewidth", treewidth},
            {"cubic_ball_ceiling", lingrowth::to_string(cubic_ball_ceiling)},
            {"ball_bound_holds", ball_bound_holds},
            {"c_at_most_4", within_four}};
  }
};

// Largest possible ball of radius r in a graph of maximum degree 3.
inline std::int64_t cubic_ball_size(int n, int r) {
  return r < 30 ? std::min<std::int64_t>(n, 3 * (std::int64_t{1} << r) - 2) : n;
}

inline rational cubic_ball_ceiling(int n) {
  rational best = 0;
  for (int r = 1; r <= n; ++r) best = std::max(best, rational(cubic_ball_size(n, r), r));
  return best;
}

// Growth constants and exact treewidth of random cubic graphs. The per-radius
// ball bound is the only asserted fact; c_G <= 4 is recorded per row.
inline std::vector<exploration_row> lower_bound_exploration(const std::vector<int>& sizes,
                                                            const std::vector<std::uint64_t>& seeds) {
  for (int n : sizes)
    if (n > exact_treewidth_default_limit) {
      throw capacity_error("exploration sizes are limited to " + std::to_string(exact_treewidth_default_limit));
    }
  std::vector<exploration_row> rows;
  for (int n : sizes) {
    for (auto seed : seeds) {
      const auto g = random_cubic(n, seed);
      exploration_row row;
      row.n = n;
      row.seed = seed;
      const auto profile = compute_growth_profile(g, n);
      row.growth_constant = profile.growth_constant;
      row.ball_bound_holds = true;
      for (int r = 1; r <= n; ++r) row.ball_bound_holds = row.ball_bound_holds && profile.at(r) <= cubic_ball_size(n, r);
      row.treewidth = exact_treewidth(g).width;
      row.cubic_ball_ceiling = cubic_ball_ceiling(n);
      row.within_four = row.growth_constant <= 4;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace lingrowth
