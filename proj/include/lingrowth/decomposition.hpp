#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lingrowth/error.hpp"
#include "lingrowth/graph.hpp"
#include "lingrowth/rational.hpp"
#include "lingrowth/separators.hpp"

namespace lingrowth {

// Bags indexed by node id; `edges` are the tree edges between node ids.
struct tree_decomposition {
  std::vector<vertex_set> bags;
  std::vector<std::pair<int, int>> edges;

  int node_count() const { return static_cast<int>(bags.size()); }

  // max |bag| - 1; -1 for the single empty bag of the empty graph.
  int width() const {
    std::size_t best = 0;
    for (const auto& bag : bags) best = std::max(best, bag.size());
    return static_cast<int>(best) - 1;
  }
};

struct td_report {
  bool valid = false;
  int width = -1;
  std::string first_failure;
};

inline td_report check_tree_decomposition(const graph& g, const tree_decomposition& td) {
  td_report out;
  out.width = td.width();
  const int nodes = td.node_count();
  auto fail = [&](std::string why) {
    out.first_failure = std::move(why);
    return out;
  };
  if (nodes == 0) return fail("decomposition has no nodes");
  if (static_cast<int>(td.edges.size()) != nodes - 1) {
    return fail("tree has " + std::to_string(nodes) + " nodes but " + std::to_string(td.edges.size()) + " edges");
  }
  std::vector<std::vector<int>> tree(static_cast<std::size_t>(nodes));
  for (auto [x, y] : td.edges) {
    if (x < 0 || y < 0 || x >= nodes || y >= nodes || x == y) {
      return fail("tree edge {" + std::to_string(x) + "," + std::to_string(y) + "} is malformed");
    }
    tree[static_cast<std::size_t>(x)].push_back(y);
    tree[static_cast<std::size_t>(y)].push_back(x);
  }
  {
    std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : tree[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != nodes) return fail("decomposition tree is disconnected");
  }

  const int n = g.vertex_count();
  std::vector<std::vector<int>> occurrences(static_cast<std::size_t>(n));
  for (int x = 0; x < nodes; ++x) {
    const auto& bag = td.bags[static_cast<std::size_t>(x)];
    for (std::size_t i = 0; i < bag.size(); ++i) {
      const vertex v = bag[i];
      if (!g.contains(v)) return fail("bag " + std::to_string(x) + " holds unknown vertex " + std::to_string(v));
      if (i > 0 && bag[i - 1] >= v) return fail("bag " + std::to_string(x) + " is not sorted and duplicate free");
      occurrences[static_cast<std::size_t>(v)].push_back(x);
    }
    if (bag.empty() && n > 0) return fail("bag " + std::to_string(x) + " is empty");
  }

  std::vector<int> mark(static_cast<std::size_t>(nodes), -1);
  for (vertex v = 0; v < n; ++v) {
    const auto& occ = occurrences[static_cast<std::size_t>(v)];
    if (occ.empty()) return fail("vertex " + std::to_string(v) + " is in no bag");
    for (int x : occ) mark[static_cast<std::size_t>(x)] = v;
    // The nodes holding v must induce a connected subtree.
    std::vector<int> stack{occ.front()};
    mark[static_cast<std::size_t>(occ.front())] = -2 - v;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : tree[static_cast<std::size_t>(x)]) {
        if (mark[static_cast<std::size_t>(y)] == v) {
          mark[static_cast<std::size_t>(y)] = -2 - v;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != occ.size()) {
      return fail("bags containing vertex " + std::to_string(v) + " do not form a subtree");
    }
  }

  for (auto [u, v] : g.edges()) {
    const auto& ou = occurrences[static_cast<std::size_t>(u)];
    const auto& ov = occurrences[static_cast<std::size_t>(v)];
    std::vector<int> common;
    std::set_intersection(ou.begin(), ou.end(), ov.begin(), ov.end(), std::back_inserter(common));
    if (common.empty()) {
      return fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not covered by any bag");
    }
  }
  out.valid = true;
  return out;
}

// ---------------------------------------------------------------------------
// Separator-driven construction.
//
// decompose(X, W) returns a decomposition of g[X] whose root bag contains the
// boundary W ⊆ X; no edge leaves X from X∖W. A connected X is split along a
// BFS layer V_j, j in [1, p-1], of a layering from the central vertex or from
// a boundary vertex. Thin layers are preferred; among them the cut with the
// smallest child boundary wins. The root bag is W ∪ V_j and the sides recurse
// with boundaries (W ∩ A) ∪ V_j and (W ∩ B) ∪ V_j. Both sides drop a layer,
// so every call strictly shrinks X.

struct build_stats {
  int separations = 0;
  int max_separator = 0;
  int max_boundary = 0;
};

namespace detail {

class separator_decomposer {
 public:
  separator_decomposer(const graph& g, const rational& c) : g_(g), c_(c) {}

  tree_decomposition run(build_stats* stats) {
    tree_decomposition td;
    if (g_.empty()) {
      td.bags.emplace_back();
      return td;
    }
    decompose(all_vertices(g_), {}, td);
    if (stats) *stats = stats_;
    return td;
  }

 private:
  int emit(vertex_set bag, const std::vector<int>& children, tree_decomposition& td) {
    const int id = td.node_count();
    td.bags.push_back(std::move(bag));
    for (int child : children) td.edges.emplace_back(id, child);
    return id;
  }

  // Returns the node whose bag contains w.
  int decompose(const vertex_set& x, const vertex_set& w, tree_decomposition& td) {
    stats_.max_boundary = std::max(stats_.max_boundary, static_cast<int>(w.size()));
    // One free vertex left: the bag W ∪ {v} is no larger than any split bag.
    if (x.size() <= w.size() + 1) return emit(x, {}, td);

    const auto comps = components(g_, x);
    if (comps.size() > 1) {
      std::vector<int> roots;
      for (const auto& comp : comps) roots.push_back(decompose(comp, set_intersection(w, comp), td));
      if (w.empty()) {
        // Components share no vertices; hang them all off the first one.
        for (std::size_t i = 1; i < roots.size(); ++i) td.edges.emplace_back(roots[0], roots[i]);
        return roots[0];
      }
      return emit(w, roots, td);
    }

    const auto central = central_layering(g_, x);
    if (central.eccentricity <= 1) return emit(x, {}, td);

    // Layerings from the central vertex and from up to eight boundary
    // vertices; a cut at layer j of any of them is a separation of g[X].
    std::vector<layer_structure> layerings{central};
    const vertex_mask in_x(g_, x);
    for (std::size_t i = 0; i < w.size() && i < 8; ++i)
      if (w[i] != central.center) layerings.push_back(layers_within(g_, w[i], in_x));

    const vertex_mask in_w(g_, w);
    struct choice {
      std::tuple<std::int64_t, std::int64_t, std::size_t, int> score;
      std::size_t layering;
      int j;
    };
    std::optional<choice> best;
    auto consider = [&](std::size_t li, bool thin_only) {
      const auto& ls = layerings[li];
      const int p = ls.eccentricity;
      // prefix[i] = |layers 0..i|, wprefix[i] = |W ∩ layers 0..i|
      std::vector<std::int64_t> prefix(static_cast<std::size_t>(p) + 1), wprefix(static_cast<std::size_t>(p) + 1);
      std::int64_t run = 0, wrun = 0;
      for (int i = 0; i <= p; ++i) {
        for (vertex v : ls.layers[static_cast<std::size_t>(i)]) {
          ++run;
          if (in_w[v]) ++wrun;
        }
        prefix[static_cast<std::size_t>(i)] = run;
        wprefix[static_cast<std::size_t>(i)] = wrun;
      }
      for (int j = 1; j < p; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const auto sep = static_cast<std::int64_t>(ls.layers[ju].size());
        if (thin_only && is_thick(ls.layers[ju].size(), c_)) continue;
        // child boundaries are (W ∩ side) ∪ layer j
        const std::int64_t w_sep = wprefix[ju] - wprefix[ju - 1];
        const std::int64_t w_a = wprefix[ju] - w_sep + sep;
        const std::int64_t w_b = wrun - wprefix[ju - 1] - w_sep + sep;
        const std::int64_t side = std::max(prefix[ju], run - prefix[ju - 1]);
        choice cand{{std::max(w_a, w_b), side, li, j}, li, j};
        if (!best || cand.score < best->score) best = cand;
      }
    };
    for (std::size_t li = 0; li < layerings.size(); ++li) consider(li, true);
    if (!best) {
      for (std::size_t li = 0; li < layerings.size(); ++li) consider(li, false);
    }
    if (!best) return emit(x, {}, td);

    const auto& ls = layerings[best->layering];
    const int j = best->j;
    const auto split = split_at(ls, j, static_cast<int>(x.size()));
    const auto& sep = ls.layers[static_cast<std::size_t>(j)];
    ++stats_.separations;
    stats_.max_separator = std::max(stats_.max_separator, static_cast<int>(sep.size()));

    const int left = decompose(split.a, set_union(set_intersection(w, split.a), sep), td);
    const int right = decompose(split.b, set_union(set_intersection(w, split.b), sep), td);
    return emit(set_union(w, sep), {left, right}, td);
  }

  const graph& g_;
  rational c_;
  build_stats stats_;
};

}  // namespace detail

// Decomposition from BFS-layer separations; valid for every c >= 1, with width
// driven by how well f(r) <= c r holds. Node ids are assigned in post-order.
inline tree_decomposition build_tree_decomposition(const graph& g, const rational& c,
                                                   build_stats* stats = nullptr) {
  if (c < 1) throw precondition_error("c must be at least 1, got " + to_string(c));
  auto td = detail::separator_decomposer(g, c).run(stats);
  const auto report = check_tree_decomposition(g, td);
  if (!report.valid) throw invariant_error("builder produced an invalid decomposition: " + report.first_failure);
  return td;
}

// ---------------------------------------------------------------------------
// Grid minor models.

// Branch sets H_{i,j} of a q x q grid minor, stored row-major.
struct minor_model {
  int q = 0;
  std::vector<vertex_set> branch_sets;

  const vertex_set& at(int i, int j) const { return branch_sets.at(static_cast<std::size_t>(i * q + j)); }

  vertex_set row(int i) const {
    vertex_set out;
    for (int j = 0; j < q; ++j) out = set_union(out, at(i, j));
    return out;
  }
  vertex_set column(int j) const {
    vertex_set out;
    for (int i = 0; i < q; ++i) out = set_union(out, at(i, j));
    return out;
  }
};

// Singleton branch sets of grid(q) inside itself.
inline minor_model identity_grid_model(int q) {
  minor_model m;
  m.q = q;
  for (vertex v = 0; v < q * q; ++v) m.branch_sets.push_back({v});
  return m;
}

struct minor_verdict {
  bool valid = false;
  std::string first_failure;
};

inline minor_verdict verify_grid_minor_model(const graph& g, const minor_model& model) {
  minor_verdict out;
  const int q = model.q;
  if (q < 1 || model.branch_sets.size() != static_cast<std::size_t>(q) * static_cast<std::size_t>(q)) {
    out.first_failure = "model needs q*q branch sets";
    return out;
  }
  auto name = [](int i, int j) { return "H(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      const auto& set = model.at(i, j);
      if (set.empty()) {
        out.first_failure = name(i, j) + " is empty";
        return out;
      }
      for (vertex v : set) {
        if (!g.contains(v)) {
          out.first_failure = name(i, j) + " holds unknown vertex " + std::to_string(v);
          return out;
        }
        auto& o = owner[static_cast<std::size_t>(v)];
        if (o >= 0) {
          out.first_failure = "vertex " + std::to_string(v) + " lies in both " + name(o / q, o % q) +
                              " and " + name(i, j);
          return out;
        }
        o = i * q + j;
      }
      if (!is_connected(g, normalized(set))) {
        out.first_failure = name(i, j) + " is not connected";
        return out;
      }
    }
  }
  auto touches = [&](int from, int to) {
    for (vertex v : model.branch_sets[static_cast<std::size_t>(from)])
      for (vertex w : g.neighbors(v))
        if (owner[static_cast<std::size_t>(w)] == to) return true;
    return false;
  };
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j + 1 < q; ++j) {
      if (!touches(i * q + j, i * q + j + 1)) {
        out.first_failure = "no edge between " + name(i, j) + " and " + name(i, j + 1);
        return out;
      }
      if (!touches(j * q + i, (j + 1) * q + i)) {
        out.first_failure = "no edge between " + name(j, i) + " and " + name(j + 1, i);
        return out;
      }
    }
  }
  out.valid = true;
  return out;
}

}  // namespace lingrowth
