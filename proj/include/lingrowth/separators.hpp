#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lingrowth/error.hpp"
#include "lingrowth/graph.hpp"
#include "lingrowth/rational.hpp"

namespace lingrowth {

// (A, B) with A ∪ B = X and no edge between A∖B and B∖A.
struct separation {
  vertex_set a;
  vertex_set b;
  int host_size = 0;

  int order() const { return static_cast<int>(set_intersection(a, b).size()); }
  vertex_set separator() const { return set_intersection(a, b); }
  vertex_set a_only() const { return set_difference(a, b); }
  vertex_set b_only() const { return set_difference(b, a); }

  friend bool operator==(const separation&, const separation&) = default;
};

struct separation_report {
  bool valid = false;
  int order = 0;
  // max(|A|, |B|) / n
  rational alpha_achieved = 1;
  // max(|A∖B|, |B∖A|) / n, the quantity the balance arguments bound
  rational exclusive_alpha = 1;
  bool within_alpha = false;  // exclusive_alpha <= alpha
  int a_only = 0;
  int both = 0;
  int b_only = 0;
  std::string failure;
};

inline separation_report check_separation(const graph& g, const vertex_set& x, const separation& s,
                                          const rational& alpha) {
  separation_report out;
  const auto sep = s.separator();
  const auto a_only = s.a_only();
  const auto b_only = s.b_only();
  out.order = static_cast<int>(sep.size());
  out.a_only = static_cast<int>(a_only.size());
  out.both = out.order;
  out.b_only = static_cast<int>(b_only.size());
  const auto n = static_cast<std::int64_t>(x.size());
  if (n > 0) {
    out.alpha_achieved = rational(static_cast<std::int64_t>(std::max(s.a.size(), s.b.size())), n);
    out.exclusive_alpha = rational(std::max<std::int64_t>(out.a_only, out.b_only), n);
  }
  out.within_alpha = out.exclusive_alpha <= alpha;

  const bool a_sorted = std::is_sorted(s.a.begin(), s.a.end()) &&
                        std::adjacent_find(s.a.begin(), s.a.end()) == s.a.end();
  const bool b_sorted = std::is_sorted(s.b.begin(), s.b.end()) &&
                        std::adjacent_find(s.b.begin(), s.b.end()) == s.b.end();
  if (!a_sorted || !b_sorted) {
    out.failure = "sides must be sorted and duplicate free";
    return out;
  }
  if (set_union(s.a, s.b) != x) {
    out.failure = "A ∪ B differs from the separated vertex set";
    return out;
  }
  const vertex_mask in_b_only(g, b_only);
  for (vertex u : a_only) {
    for (vertex w : g.neighbors(u)) {
      if (in_b_only[w]) {
        out.failure = "edge {" + std::to_string(std::min(u, w)) + "," + std::to_string(std::max(u, w)) +
                      "} crosses the separation";
        return out;
      }
    }
  }
  out.valid = true;
  return out;
}

// Bookkeeping of one BFS-layer split: R holds the thick layers (|V_i| >= 2c),
// S the thin ones, both within [1, p]; j is the least element of S with
// 2|S ∩ [1, j]| >= |S|.
struct layer_split_trace {
  vertex center = 0;
  int p = 0;
  std::vector<int> layer_sizes;
  std::vector<int> thick;  // R
  std::vector<int> thin;   // S
  int j = 0;
  rational c = 1;
  // Set when S is empty, which can only happen if the growth premise fails
  // for c; j is then the smallest layer in [1, p].
  bool thin_set_empty = false;
};

namespace detail {

// A vertex of minimum eccentricity in the connected subgraph g[x], smallest id
// on ties, together with its layering.
inline layer_structure central_layering(const graph& g, const vertex_set& x) {
  const vertex_mask inside(g, x);
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), unreachable);
  std::vector<vertex> order;
  vertex best = x.front();
  int best_ecc = -1;
  for (vertex v : x) {
    bfs_within(g, v, inside, dist, order);
    const int ecc = dist[static_cast<std::size_t>(order.back())];
    for (vertex w : order) dist[static_cast<std::size_t>(w)] = unreachable;
    if (best_ecc < 0 || ecc < best_ecc) {
      best_ecc = ecc;
      best = v;
    }
  }
  return layers_within(g, best, inside);
}

// |V_i| >= 2c as an exact comparison.
inline bool is_thick(std::size_t layer_size, const rational& c) {
  return rational(static_cast<std::int64_t>(layer_size)) >= 2 * c;
}

inline separation split_at(const layer_structure& ls, int j, int host_size) {
  separation s;
  s.host_size = host_size;
  for (int i = 0; i <= j; ++i) s.a.insert(s.a.end(), ls.layers[static_cast<std::size_t>(i)].begin(),
                                          ls.layers[static_cast<std::size_t>(i)].end());
  for (int i = j; i <= ls.eccentricity; ++i)
    s.b.insert(s.b.end(), ls.layers[static_cast<std::size_t>(i)].begin(),
               ls.layers[static_cast<std::size_t>(i)].end());
  std::sort(s.a.begin(), s.a.end());
  std::sort(s.b.begin(), s.b.end());
  return s;
}

inline void require_connected_subset(const graph& g, const vertex_set& x) {
  for (vertex v : x) require_vertex(g, v);
  if (x.empty()) throw precondition_error("cannot separate an empty vertex set");
  if (!is_connected(g, x)) throw precondition_error("vertex set does not induce a connected subgraph");
}

}  // namespace detail

// BFS-layer separation of the connected subgraph g[x]: A = layers 0..j and
// B = layers j..p from a central vertex. When f(r) <= c r holds for g[x] the
// order is below 2c and both exclusive sides are at most (1 - 1/(4c))|x|;
// the function itself only guarantees validity.
inline std::pair<separation, layer_split_trace> bfs_layer_separation(const graph& g,
                                                                     const vertex_set& x,
                                                                     const rational& c) {
  if (c < 1) throw precondition_error("c must be at least 1, got " + to_string(c));
  detail::require_connected_subset(g, x);
  if (x.size() == 1) throw degenerate_error("a single vertex has no layer split");

  const auto ls = detail::central_layering(g, x);
  layer_split_trace trace;
  trace.center = ls.center;
  trace.p = ls.eccentricity;
  trace.c = c;
  for (const auto& layer : ls.layers) trace.layer_sizes.push_back(static_cast<int>(layer.size()));
  for (int i = 1; i <= trace.p; ++i) {
    if (detail::is_thick(ls.layers[static_cast<std::size_t>(i)].size(), c)) trace.thick.push_back(i);
    else trace.thin.push_back(i);
  }
  if (trace.thin.empty()) {
    trace.thin_set_empty = true;
    trace.j = 1;
    for (int i = 2; i <= trace.p; ++i)
      if (trace.layer_sizes[static_cast<std::size_t>(i)] < trace.layer_sizes[static_cast<std::size_t>(trace.j)]) trace.j = i;
  } else {
    const auto s_size = trace.thin.size();
    for (std::size_t k = 0; k < s_size; ++k) {
      if (2 * (k + 1) >= s_size) {
        trace.j = trace.thin[k];
        break;
      }
    }
  }
  return {detail::split_at(ls, trace.j, static_cast<int>(x.size())), trace};
}

// Maps a vertex set to a separation of the subgraph it induces.
using separation_oracle = std::function<separation(const vertex_set&)>;

// Connected-subgraph oracle built on bfs_layer_separation; a single vertex is
// separated as ({v}, {v}).
inline separation_oracle layer_oracle(const graph& g, const rational& c) {
  return [&g, c](const vertex_set& x) {
    if (x.size() == 1) return separation{x, x, 1};
    return bfs_layer_separation(g, x, c).first;
  };
}

namespace detail {

inline void require_alpha(const rational& alpha) {
  if (alpha < rational(2, 3) || alpha >= 1) {
    throw precondition_error("alpha must lie in [2/3, 1), got " + to_string(alpha));
  }
}

// Size first, then smallest id.
inline bool larger_side(const vertex_set& p, const vertex_set& q) {
  if (p.size() != q.size()) return p.size() > q.size();
  if (p.empty()) return true;
  return p.front() < q.front();
}

}  // namespace detail

// Lifts a connected-subgraph oracle to arbitrary vertex sets by peeling
// smallest components. Peeling stops as soon as removing the smallest
// component J leaves at most 2/3 of the current set, giving (X∖J, J) of order
// 0; otherwise the rest is separated and J joins the smaller side.
inline separation separate_possibly_disconnected(const graph& g, const vertex_set& x,
                                                 const rational& alpha,
                                                 const separation_oracle& connected_separator) {
  detail::require_alpha(alpha);
  if (x.empty()) throw precondition_error("cannot separate an empty vertex set");
  for (vertex v : x) require_vertex(g, v);
  const auto comps = components(g, x);

  // remaining[t] = union of comps[t..]
  std::vector<std::size_t> remaining_size(comps.size() + 1, 0);
  for (std::size_t t = comps.size(); t-- > 0;) remaining_size[t] = remaining_size[t + 1] + comps[t].size();
  auto union_from = [&](std::size_t t) {
    vertex_set out;
    for (std::size_t k = t; k < comps.size(); ++k) out.insert(out.end(), comps[k].begin(), comps[k].end());
    std::sort(out.begin(), out.end());
    return out;
  };

  std::size_t t = 0;
  separation current;
  while (true) {
    if (t + 1 == comps.size()) {
      current = connected_separator(comps[t]);
      break;
    }
    const std::size_t here = remaining_size[t];
    const std::size_t rest = remaining_size[t + 1];
    if (3 * rest <= 2 * here) {
      current = separation{union_from(t + 1), comps[t], static_cast<int>(here)};
      break;
    }
    ++t;
  }
  // Unwind: the larger side of the inner separation keeps at least a third of
  // the current set, and the peeled component joins the other side.
  while (t-- > 0) {
    if (!detail::larger_side(current.a, current.b)) std::swap(current.a, current.b);
    current.b = set_union(current.b, comps[t]);
    current.host_size = static_cast<int>(remaining_size[t]);
  }
  return current;
}

// Number of rounds after which an alpha-balanced oracle must have produced a
// 2/3-balanced separation: the least i with alpha^i <= 2/3, by exact powering.
inline int rebalance_round_cap(const rational& alpha) {
  detail::require_alpha(alpha);
  const big_int num = boost::multiprecision::numerator(alpha);
  const big_int den = boost::multiprecision::denominator(alpha);
  big_int num_pow = num, den_pow = den;
  int i = 1;
  while (3 * num_pow > 2 * den_pow) {
    num_pow *= num;
    den_pow *= den;
    ++i;
  }
  return i;
}

struct rebalance_result {
  separation sep;
  int iterations = 0;     // separations (A_i, B_i) formed, i.e. oracle calls
  int update_rounds = 0;  // iterations - 1
  int max_step_order = 0;
};

// Repeatedly splits the oversized exclusive side until both exclusive sides
// hold at most 2/3 of X. With an alpha-balanced oracle this needs at most
// rebalance_round_cap(alpha) separations, each adding one oracle separator.
inline rebalance_result rebalance_to_two_thirds(const graph& g, const vertex_set& x,
                                                const rational& alpha,
                                                const separation_oracle& alpha_separator) {
  const int cap = rebalance_round_cap(alpha);
  if (x.empty()) throw precondition_error("cannot separate an empty vertex set");
  for (vertex v : x) require_vertex(g, v);
  const auto n = static_cast<std::int64_t>(x.size());
  auto oversized = [n](const vertex_set& side) { return 3 * static_cast<std::int64_t>(side.size()) > 2 * n; };

  rebalance_result out;
  out.sep = alpha_separator(x);
  out.iterations = 1;
  out.max_step_order = out.sep.order();
  while (true) {
    auto a_only = out.sep.a_only();
    auto b_only = out.sep.b_only();
    if (!oversized(a_only) && !oversized(b_only)) break;
    if (out.iterations >= cap) {
      throw invariant_error("rebalancing exceeded " + std::to_string(cap) +
                            " rounds; the oracle is not alpha-balanced for alpha = " + to_string(alpha));
    }
    if (oversized(a_only)) {
      std::swap(out.sep.a, out.sep.b);
      std::swap(a_only, b_only);
    }
    separation step = alpha_separator(b_only);
    out.max_step_order = std::max(out.max_step_order, step.order());
    // D is the larger side.
    if (detail::larger_side(step.a, step.b)) std::swap(step.a, step.b);
    const auto& c_side = step.a;
    const auto& d_side = step.b;
    const auto old_sep = out.sep.separator();
    out.sep.a = set_union(out.sep.a, c_side);
    out.sep.b = set_union(d_side, old_sep);
    ++out.iterations;
  }
  out.sep.host_size = static_cast<int>(n);
  out.update_rounds = out.iterations - 1;
  return out;
}

}  // namespace lingrowth
