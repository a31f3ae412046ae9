#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lingrowth/error.hpp"
#include "lingrowth/generators.hpp"
#include "lingrowth/graph.hpp"
#include "lingrowth/growth.hpp"
#include "lingrowth/rational.hpp"

namespace lingrowth {

// ---------------------------------------------------------------------------
// Strong-product embeddings G ⊆ T ⊠ K_k.

struct product_slot {
  int node = 0;
  int copy = 1;  // in [1, k]

  friend bool operator==(const product_slot&, const product_slot&) = default;
  friend auto operator<=>(const product_slot&, const product_slot&) = default;
};

struct host_embedding {
  graph host_tree;
  int root = 0;
  int k = 1;
  std::vector<product_slot> vertex_map;  // indexed by vertex of G
};

struct embedding_verdict {
  bool valid = false;
  std::string first_failure;
};

inline embedding_verdict check_product_embedding(const graph& g, const host_embedding& emb) {
  if (!is_tree(emb.host_tree)) throw precondition_error("host graph is not a tree");
  if (!emb.host_tree.contains(emb.root)) throw precondition_error("root is not a host node");
  if (static_cast<int>(emb.vertex_map.size()) != g.vertex_count()) {
    throw precondition_error("vertex map must cover every vertex of G");
  }
  embedding_verdict out;
  for (vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& s = emb.vertex_map[static_cast<std::size_t>(v)];
    if (!emb.host_tree.contains(s.node) || s.copy < 1 || s.copy > emb.k) {
      out.first_failure = "vertex " + std::to_string(v) + " maps outside T ⊠ K_" + std::to_string(emb.k);
      return out;
    }
  }
  auto slots = emb.vertex_map;
  std::sort(slots.begin(), slots.end());
  if (auto dup = std::adjacent_find(slots.begin(), slots.end()); dup != slots.end()) {
    out.first_failure = "two vertices share node " + std::to_string(dup->node) + " copy " + std::to_string(dup->copy);
    return out;
  }
  for (auto [u, v] : g.edges()) {
    const auto& a = emb.vertex_map[static_cast<std::size_t>(u)];
    const auto& b = emb.vertex_map[static_cast<std::size_t>(v)];
    const bool ok = a.node == b.node ? a.copy != b.copy : emb.host_tree.adjacent(a.node, b.node);
    if (!ok) {
      out.first_failure = "edge {" + std::to_string(u) + "," + std::to_string(v) + "} maps to non-adjacent nodes " +
                          std::to_string(a.node) + " and " + std::to_string(b.node);
      return out;
    }
  }
  out.valid = true;
  return out;
}

// G ⊆ K_1 ⊠ K_n: one host node, vertex v in copy v+1.
inline host_embedding single_node_embedding(const graph& g) {
  host_embedding emb;
  emb.host_tree = graph(1);
  emb.k = std::max(1, g.vertex_count());
  for (vertex v = 0; v < g.vertex_count(); ++v) emb.vertex_map.push_back({0, v + 1});
  return emb;
}

// A tree embeds in itself ⊠ K_1.
inline host_embedding tree_self_embedding(const graph& tree, int root = 0) {
  if (!is_tree(tree)) throw precondition_error("graph is not a tree");
  host_embedding emb;
  emb.host_tree = tree;
  emb.root = root;
  emb.k = 1;
  for (vertex v = 0; v < tree.vertex_count(); ++v) emb.vertex_map.push_back({v, 1});
  return emb;
}

// BFS layers of a connected graph give G ⊆ P ⊠ K_w with w the widest layer:
// layer i is node i, a vertex's copy is its rank inside the layer.
inline host_embedding layering_embedding(const graph& g, vertex center = 0) {
  if (!is_connected(g)) throw precondition_error("layering embedding needs a connected graph");
  const auto ls = bfs_layers(g, center);
  host_embedding emb;
  emb.host_tree = path_graph(static_cast<int>(ls.layers.size()));
  emb.root = 0;
  emb.vertex_map.resize(static_cast<std::size_t>(g.vertex_count()));
  emb.k = 1;
  for (std::size_t i = 0; i < ls.layers.size(); ++i) {
    emb.k = std::max(emb.k, static_cast<int>(ls.layers[i].size()));
    for (std::size_t r = 0; r < ls.layers[i].size(); ++r)
      emb.vertex_map[static_cast<std::size_t>(ls.layers[i][r])] = {static_cast<int>(i), static_cast<int>(r) + 1};
  }
  return emb;
}

// ---------------------------------------------------------------------------
// Subdivisions.

struct host_subdivision_data {
  std::vector<int> gamma;            // per base edge
  std::vector<std::int64_t> ell;     // ell[i] = #{e : gamma(e) > i}, i in [0, n_T-1]
  std::vector<std::int64_t> g_table; // indices [0, n_T]; g_table[n_T] = 1
  rational epsilon;
  int k = 1;
  int max_degree = 0;
};

struct uniform_subdivision_data {
  std::int64_t ell = 0;  // every edge receives 2*ell internal vertices
  std::int64_t m = 0;
  std::int64_t n = 0;
  int max_degree = 0;
};

// Base graph with each edge e = base_edges[i] replaced by a path of
// path_length[i] edges. Base vertices keep their ids; internal vertices of
// edge i follow in edge order, listed from the smaller endpoint outwards.
struct subdivision_record {
  graph base;
  std::vector<edge> base_edges;
  std::vector<std::int64_t> path_length;
  graph result;
  std::optional<host_subdivision_data> host;
  std::optional<uniform_subdivision_data> uniform;
};

inline constexpr std::int64_t default_subdivision_budget = 200000;

inline std::int64_t projected_subdivision_size(const graph& g, const std::vector<std::int64_t>& lengths) {
  big_int total = g.vertex_count();
  for (auto len : lengths) total += len - 1;
  return to_int64(total);
}

inline graph subdivide(const graph& g, const std::vector<std::int64_t>& lengths) {
  const auto edges = g.edges();
  if (lengths.size() != edges.size()) throw precondition_error("one path length per edge required");
  const std::int64_t total = projected_subdivision_size(g, lengths);
  if (total > std::numeric_limits<int>::max() / 2) throw capacity_error("subdivision too large");
  std::vector<edge> out;
  vertex next = g.vertex_count();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (lengths[i] < 1) throw precondition_error("path lengths must be positive");
    vertex prev = edges[i].first;
    for (std::int64_t s = 1; s < lengths[i]; ++s) {
      out.emplace_back(prev, next);
      prev = next++;
    }
    out.emplace_back(std::min(prev, edges[i].second), std::max(prev, edges[i].second));
  }
  return graph(static_cast<int>(total), out);
}

// Recovers the base graph by walking each maximal path of internal vertices
// (ids >= base_count) between base vertices.
inline graph suppress_subdivision(const graph& h, int base_count) {
  std::vector<edge> out;
  for (vertex s = 0; s < base_count; ++s) {
    for (vertex first : h.neighbors(s)) {
      vertex prev = s, cur = first;
      while (cur >= base_count) {
        if (h.degree(cur) != 2) {
          throw structure_error("internal vertex " + std::to_string(cur) + " does not have degree 2");
        }
        const auto nb = h.neighbors(cur);
        const vertex nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
      }
      if (cur == s) throw structure_error("subdivided loop at vertex " + std::to_string(s));
      if (s < cur) out.emplace_back(s, cur);
    }
  }
  return graph(base_count, out);
}

// Least g_table with g_table[n_T] = 1 and
// eps * g_table[r] >= 2 g_table[r+1] ell(r) + |V(G)| for r in [0, n_T-1].
inline std::vector<big_int> minimal_g_table(const std::vector<std::int64_t>& ell, int vertices, const rational& eps) {
  const std::size_t depth = ell.size();  // n_T
  std::vector<big_int> table(depth + 1, 1);
  for (std::size_t r = depth; r-- > 0;) {
    const rational need = rational(2 * table[r + 1] * ell[r] + vertices) / eps;
    table[r] = std::max<big_int>(1, ceil_of(need));
  }
  return table;
}

// Subdivides each edge e of G ⊆ T ⊠ K_k into a path of length 2 g(gamma(e)),
// where gamma(e) is the smaller root distance of its endpoints' host nodes.
// The growth certificate f(r) <= (k Δ + eps) r + 1 is left to the caller.
inline subdivision_record subdivide_in_host(const graph& g, const host_embedding& emb, const rational& eps,
                                            std::int64_t size_budget = default_subdivision_budget) {
  if (eps <= 0) throw precondition_error("epsilon must be positive");
  if (g.edge_count() == 0) throw precondition_error("graph needs at least one edge");
  const auto verdict = check_product_embedding(g, emb);
  if (!verdict.valid) throw precondition_error("invalid host embedding: " + verdict.first_failure);

  const int n_t = emb.host_tree.vertex_count();
  const auto root_dist = distances_from(emb.host_tree, emb.root);
  host_subdivision_data data;
  data.epsilon = eps;
  data.k = emb.k;
  data.max_degree = g.max_degree();
  const auto edges = g.edges();
  for (auto [u, v] : edges) {
    const int du = root_dist[static_cast<std::size_t>(emb.vertex_map[static_cast<std::size_t>(u)].node)];
    const int dv = root_dist[static_cast<std::size_t>(emb.vertex_map[static_cast<std::size_t>(v)].node)];
    data.gamma.push_back(std::min(du, dv));
  }
  data.ell.assign(static_cast<std::size_t>(n_t), 0);
  for (int gm : data.gamma)
    for (int i = 0; i < gm; ++i) ++data.ell[static_cast<std::size_t>(i)];

  const auto table = minimal_g_table(data.ell, g.vertex_count(), eps);
  big_int projected = g.vertex_count();
  for (int gm : data.gamma) projected += 2 * table[static_cast<std::size_t>(gm)] - 1;
  if (projected > size_budget) {
    throw capacity_error("host subdivision would have " + projected.str() + " vertices (budget " +
                         std::to_string(size_budget) + ")");
  }
  for (const auto& t : table) data.g_table.push_back(to_int64(t));

  subdivision_record rec;
  rec.base = g;
  rec.base_edges = edges;
  for (int gm : data.gamma) rec.path_length.push_back(2 * data.g_table[static_cast<std::size_t>(gm)]);
  rec.result = subdivide(g, rec.path_length);
  rec.host = std::move(data);
  return rec;
}

struct superlinear_options {
  std::int64_t scan_budget = 1000000;
  std::int64_t size_budget = default_subdivision_budget;
};

// Uniform subdivision for a superlinear bound f: ell is the least r >= 1 with
// f(r) >= 2 r m + n and every edge gets 2 ell internal vertices. For r >= ell
// every ball is at most |V| = 2 ell m + n <= f(ell) <= f(r); for r < ell a ball
// is a subdivided star, so |B_r| <= 1 + Δ r <= f(r). Both premises are
// checked here; the growth bound itself is re-verified by the caller.
inline subdivision_record subdivide_uniform_superlinear(const graph& g, const polynomial_bound& f,
                                                        bool f_monotone_declared,
                                                        const superlinear_options& opts = {}) {
  if (!f_monotone_declared) throw precondition_error("f must be declared nondecreasing");
  const std::int64_t n = g.vertex_count();
  const std::int64_t m = static_cast<std::int64_t>(g.edge_count());
  const int delta = g.max_degree();
  std::int64_t ell = 0;
  for (std::int64_t r = 1; r <= opts.scan_budget; ++r) {
    if (f(r) < rational(delta) * r + 1) {
      throw precondition_error("f(" + std::to_string(r) + ") = " + to_string(f(r)) + " is below Δr+1 = " +
                               std::to_string(delta * r + 1) + " at r = " + std::to_string(r));
    }
    if (f(r) >= rational(2 * r * m + n)) {
      ell = r;
      break;
    }
  }
  if (ell == 0) {
    throw domain_error("f(r) stays below 2rm+n for every r <= " + std::to_string(opts.scan_budget) +
                       "; f does not look superlinear");
  }
  if (!f.nondecreasing_on(1, ell + n)) throw precondition_error("f is not nondecreasing on [1, ell+n]");
  const big_int size = big_int(n) + big_int(2) * ell * m;
  if (size > opts.size_budget) {
    throw capacity_error("uniform subdivision would have " + size.str() + " vertices (budget " +
                         std::to_string(opts.size_budget) + ")");
  }
  subdivision_record rec;
  rec.base = g;
  rec.base_edges = g.edges();
  rec.path_length.assign(rec.base_edges.size(), 2 * ell + 1);
  rec.result = subdivide(g, rec.path_length);
  rec.uniform = uniform_subdivision_data{ell, m, n, delta};
  return rec;
}

// ---------------------------------------------------------------------------
// Minors.

struct degree3_expansion {
  graph result;
  std::vector<vertex> minor_map;  // new vertex -> original vertex
};

// Vertices of degree >= 4 become a path with one vertex per incident edge, the
// i-th path vertex taking the edge to the i-th smallest neighbour.
inline degree3_expansion expand_to_degree3(const graph& g) {
  const int n = g.vertex_count();
  std::vector<vertex> first(static_cast<std::size_t>(n));
  degree3_expansion out;
  vertex next = 0;
  for (vertex v = 0; v < n; ++v) {
    first[static_cast<std::size_t>(v)] = next;
    const int copies = g.degree(v) >= 4 ? g.degree(v) : 1;
    for (int i = 0; i < copies; ++i) out.minor_map.push_back(v);
    next += copies;
  }
  // Endpoint of v's copy that carries the edge to w.
  auto slot = [&](vertex v, vertex w) {
    if (g.degree(v) < 4) return first[static_cast<std::size_t>(v)];
    const auto nb = g.neighbors(v);
    return first[static_cast<std::size_t>(v)] + static_cast<vertex>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
  };
  std::vector<edge> edges;
  for (vertex v = 0; v < n; ++v)
    if (g.degree(v) >= 4)
      for (int i = 0; i + 1 < g.degree(v); ++i) edges.emplace_back(first[static_cast<std::size_t>(v)] + i, first[static_cast<std::size_t>(v)] + i + 1);
  for (auto [u, v] : g.edges()) {
    const vertex a = slot(u, v), b = slot(v, u);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  out.result = graph(next, edges);
  return out;
}

// Contracts each label class (which must induce a connected subgraph) to one
// vertex. Labels must cover [0, L).
inline graph contract_minor_map(const graph& h, const std::vector<vertex>& minor_map) {
  if (static_cast<int>(minor_map.size()) != h.vertex_count()) throw model_error("minor map must label every vertex");
  int labels = 0;
  for (vertex l : minor_map) {
    if (l < 0) throw model_error("negative label");
    labels = std::max(labels, l + 1);
  }
  std::vector<vertex_set> classes(static_cast<std::size_t>(labels));
  for (vertex v = 0; v < h.vertex_count(); ++v) classes[static_cast<std::size_t>(minor_map[static_cast<std::size_t>(v)])].push_back(v);
  for (int l = 0; l < labels; ++l) {
    if (classes[static_cast<std::size_t>(l)].empty()) throw model_error("label " + std::to_string(l) + " has no preimage");
    if (!is_connected(h, classes[static_cast<std::size_t>(l)])) {
      throw model_error("preimage of label " + std::to_string(l) + " is not connected");
    }
  }
  std::vector<edge> edges;
  for (auto [u, v] : h.edges()) {
    const vertex a = minor_map[static_cast<std::size_t>(u)], b = minor_map[static_cast<std::size_t>(v)];
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return graph(labels, edges);
}

}  // namespace lingrowth
