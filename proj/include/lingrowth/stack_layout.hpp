#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lingrowth/decomposition.hpp"
#include "lingrowth/error.hpp"
#include "lingrowth/graph.hpp"

namespace lingrowth {

struct stack_assignment {
  vertex u = 0;
  vertex v = 0;
  int stack = 1;  // in [1, k]

  friend bool operator==(const stack_assignment&, const stack_assignment&) = default;
};

// Vertex order plus one stack per edge.
struct stack_layout {
  std::vector<vertex> order;  // order[position] = vertex
  std::vector<stack_assignment> stacks;
  int k = 0;

  std::vector<int> positions() const {
    std::vector<int> pos(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    return pos;
  }
};

// Edges {a,b} and {c,d} given as position pairs (a<b, c<d) interleave when
// a < c < b < d or c < a < d < b.
inline bool interleave(std::pair<int, int> e, std::pair<int, int> f) {
  if (e.first > f.first) std::swap(e, f);
  return e.first < f.first && f.first < e.second && e.second < f.second;
}

struct stack_verdict {
  bool valid = false;
  std::optional<std::pair<stack_assignment, stack_assignment>> first_crossing;
};

inline stack_verdict check_stack_layout(const graph& g, const stack_layout& layout) {
  const int n = g.vertex_count();
  if (static_cast<int>(layout.order.size()) != n) throw structure_error("layout order does not cover V(G)");
  const auto pos = layout.positions();
  for (vertex v = 0; v < n; ++v) {
    if (pos[static_cast<std::size_t>(v)] < 0) throw structure_error("layout order is not a permutation of V(G)");
  }
  if (layout.stacks.size() != g.edge_count()) throw structure_error("layout does not assign every edge exactly once");
  std::vector<edge> assigned;
  for (const auto& s : layout.stacks) {
    if (!g.contains(s.u) || !g.contains(s.v) || !g.adjacent(s.u, s.v)) {
      throw structure_error("layout assigns non-edge {" + std::to_string(s.u) + "," + std::to_string(s.v) + "}");
    }
    if (s.stack < 1 || s.stack > layout.k) {
      throw structure_error("stack " + std::to_string(s.stack) + " outside [1," + std::to_string(layout.k) + "]");
    }
    assigned.emplace_back(std::min(s.u, s.v), std::max(s.u, s.v));
  }
  std::sort(assigned.begin(), assigned.end());
  if (std::adjacent_find(assigned.begin(), assigned.end()) != assigned.end()) {
    throw structure_error("layout assigns an edge twice");
  }

  auto span_of = [&](const stack_assignment& s) {
    const int a = pos[static_cast<std::size_t>(s.u)], b = pos[static_cast<std::size_t>(s.v)];
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  stack_verdict out;
  for (std::size_t i = 0; i < layout.stacks.size(); ++i) {
    for (std::size_t j = i + 1; j < layout.stacks.size(); ++j) {
      const auto& e = layout.stacks[i];
      const auto& f = layout.stacks[j];
      if (e.stack == f.stack && interleave(span_of(e), span_of(f))) {
        out.first_crossing = std::make_pair(e, f);
        return out;
      }
    }
  }
  out.valid = true;
  return out;
}

namespace detail {

// Lowest-stack greedy over edges sorted by (left position, right position
// descending); nested chains end up sharing a stack.
inline stack_layout greedy_stacks(const graph& g, std::vector<vertex> order) {
  stack_layout layout;
  layout.order = std::move(order);
  const auto pos = layout.positions();
  struct span_edge {
    int left, right;
    vertex u, v;
  };
  std::vector<span_edge> spans;
  for (auto [u, v] : g.edges()) {
    const int a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
    spans.push_back({std::min(a, b), std::max(a, b), u, v});
  }
  std::sort(spans.begin(), spans.end(), [](const span_edge& x, const span_edge& y) {
    if (x.left != y.left) return x.left < y.left;
    return x.right > y.right;
  });
  std::vector<std::vector<std::pair<int, int>>> pages;
  for (const auto& e : spans) {
    const std::pair<int, int> span{e.left, e.right};
    std::size_t page = 0;
    for (; page < pages.size(); ++page) {
      const bool clash = std::any_of(pages[page].begin(), pages[page].end(),
                                     [&](const auto& other) { return interleave(span, other); });
      if (!clash) break;
    }
    if (page == pages.size()) pages.emplace_back();
    pages[page].push_back(span);
    layout.stacks.push_back({e.u, e.v, static_cast<int>(page) + 1});
  }
  layout.k = static_cast<int>(pages.size());
  std::sort(layout.stacks.begin(), layout.stacks.end(), [](const auto& x, const auto& y) {
    return std::make_pair(x.u, x.v) < std::make_pair(y.u, y.v);
  });
  return layout;
}

// Exact chromatic number of a conflict graph on up to 64 vertices, by
// backtracking in a fixed order with the bound `limit` (returns -1 if more
// than limit colours are needed).
class conflict_colouring {
 public:
  explicit conflict_colouring(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  // Smallest k <= limit admitting a colouring; fills colours. -1 if none.
  int solve(int lower, int limit, std::vector<int>& colours) {
    const int m = static_cast<int>(adj_.size());
    if (m == 0) {
      colours.clear();
      return 0;
    }
    // Highest-degree first tends to fail early.
    order_.resize(static_cast<std::size_t>(m));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return std::popcount(adj_[static_cast<std::size_t>(a)]) > std::popcount(adj_[static_cast<std::size_t>(b)]);
    });
    for (int k = std::max(lower, 1); k <= limit; ++k) {
      colour_.assign(static_cast<std::size_t>(m), 0);
      if (extend(0, k, 0)) {
        colours = colour_;
        return k;
      }
    }
    return -1;
  }

 private:
  bool extend(std::size_t idx, int k, int used) {
    if (idx == order_.size()) return true;
    const int e = order_[idx];
    // Symmetry: a fresh colour is only ever the next unused one.
    const int top = std::min(k, used + 1);
    for (int c = 1; c <= top; ++c) {
      bool ok = true;
      for (auto f = adj_[static_cast<std::size_t>(e)]; f != 0 && ok; f &= f - 1)
        if (colour_[static_cast<std::size_t>(std::countr_zero(f))] == c) ok = false;
      if (!ok) continue;
      colour_[static_cast<std::size_t>(e)] = c;
      if (extend(idx + 1, k, std::max(used, c))) return true;
      colour_[static_cast<std::size_t>(e)] = 0;
    }
    return false;
  }

  std::vector<std::uint64_t> adj_;
  std::vector<int> order_;
  std::vector<int> colour_;
};

// Minimum stacks for a fixed vertex order, at most `limit`; -1 when more
// stacks would be needed.
inline int stacks_for_order(const graph& g, const std::vector<vertex>& order, const std::vector<edge>& edges,
                            int limit, stack_layout* witness) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> spans;
  for (auto [u, v] : edges) {
    const int a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
    spans.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<std::uint64_t> conflict(edges.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (interleave(spans[i], spans[j])) {
        conflict[i] |= std::uint64_t{1} << j;
        conflict[j] |= std::uint64_t{1} << i;
      }
  std::vector<int> colours;
  conflict_colouring solver(conflict);
  const int k = solver.solve(edges.empty() ? 0 : 1, limit, colours);
  if (k >= 0 && witness) {
    witness->order = order;
    witness->k = k;
    witness->stacks.clear();
    for (std::size_t i = 0; i < edges.size(); ++i)
      witness->stacks.push_back({edges[i].first, edges[i].second, colours[i]});
  }
  (void)g;
  return k;
}

}  // namespace detail

inline constexpr int exact_stack_number_limit = 8;

struct stack_number_result {
  int k = 0;
  stack_layout witness;
};

// Minimum stack count over all vertex orders. Orders are taken up to rotation
// (vertex 0 first) and reflection (second vertex smaller than the last); for
// each order the minimum is the chromatic number of its edge-interleaving
// graph. Ties keep the lexicographically least order.
inline stack_number_result exact_stack_number(const graph& g) {
  const int n = g.vertex_count();
  if (n > exact_stack_number_limit) {
    throw capacity_error("exact stack number is limited to " + std::to_string(exact_stack_number_limit) +
                         " vertices, got " + std::to_string(n));
  }
  stack_number_result out;
  std::vector<vertex> order = all_vertices(g);
  const auto edges = g.edges();
  if (edges.empty()) {
    out.witness.order = order;
    out.witness.k = 0;
    return out;
  }
  int best = static_cast<int>(edges.size()) + 1;
  do {
    if (n >= 3 && order[1] > order[static_cast<std::size_t>(n - 1)]) continue;
    stack_layout candidate;
    const int k = detail::stacks_for_order(g, order, edges, best - 1, &candidate);
    if (k >= 0 && k < best) {
      best = k;
      out.witness = candidate;
      if (best == 1) break;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  out.k = best;
  return out;
}

// Vertex order from a depth-first walk of the decomposition tree (root: the
// largest bag, smallest id on ties; children by ascending id), each bag
// contributing its not-yet-seen vertices in ascending order. Edges are then
// packed greedily. Always valid; k is not minimised.
inline stack_layout layout_from_decomposition(const graph& g, const tree_decomposition& td) {
  const auto report = check_tree_decomposition(g, td);
  if (!report.valid) throw precondition_error("invalid tree decomposition: " + report.first_failure);
  const int nodes = td.node_count();
  std::vector<std::vector<int>> tree(static_cast<std::size_t>(nodes));
  for (auto [x, y] : td.edges) {
    tree[static_cast<std::size_t>(x)].push_back(y);
    tree[static_cast<std::size_t>(y)].push_back(x);
  }
  for (auto& nb : tree) std::sort(nb.begin(), nb.end());
  int root = 0;
  for (int x = 1; x < nodes; ++x)
    if (td.bags[static_cast<std::size_t>(x)].size() > td.bags[static_cast<std::size_t>(root)].size()) root = x;

  std::vector<vertex> order;
  std::vector<char> placed(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<char> visited(static_cast<std::size_t>(nodes), 0);
  // Explicit stack of (node, next child index) to keep deep trees off the
  // call stack.
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  visited[static_cast<std::size_t>(root)] = 1;
  auto place = [&](int x) {
    for (vertex v : td.bags[static_cast<std::size_t>(x)]) {
      if (!placed[static_cast<std::size_t>(v)]) {
        placed[static_cast<std::size_t>(v)] = 1;
        order.push_back(v);
      }
    }
  };
  place(root);
  while (!stack.empty()) {
    auto& [x, next] = stack.back();
    const auto& nb = tree[static_cast<std::size_t>(x)];
    if (next == nb.size()) {
      stack.pop_back();
      continue;
    }
    const int y = nb[next++];
    if (visited[static_cast<std::size_t>(y)]) continue;
    visited[static_cast<std::size_t>(y)] = 1;
    place(y);
    stack.emplace_back(y, 0);
  }
  auto layout = detail::greedy_stacks(g, std::move(order));
  if (!check_stack_layout(g, layout).valid) throw invariant_error("greedy stack assignment produced a crossing");
  return layout;
}

}  // namespace lingrowth
