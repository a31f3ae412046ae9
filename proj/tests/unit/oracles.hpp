#pragma once

// Slow, independent re-implementations used only to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lingrowth/graph.hpp"

namespace oracle {

using lingrowth::graph;
using lingrowth::vertex;

inline std::vector<std::vector<bool>> adjacency_matrix(const graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const graph& g) {
  const int n = g.vertex_count();
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x == inf) x = -1;
  return d;
}

inline std::int64_t max_ball(const graph& g, int r) {
  const auto d = distances(g);
  std::int64_t best = 0;
  for (const auto& row : d)
    best = std::max<std::int64_t>(best, std::count_if(row.begin(), row.end(), [r](int x) { return x >= 0 && x <= r; }));
  return best;
}

// Treewidth as the minimum over all elimination orders of the largest
// neighbourhood met while eliminating with fill-in.
inline int treewidth_by_permutations(const graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return -1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto base = adjacency_matrix(g);
  int best = n - 1;
  do {
    auto adj = base;
    std::vector<bool> gone(n, false);
    int width = 0;
    for (int v : perm) {
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (!gone[w] && adj[v][w]) nb.push_back(w);
      width = std::max(width, static_cast<int>(nb.size()));
      if (width >= best) break;
      for (int a : nb)
        for (int b : nb)
          if (a != b) adj[a][b] = true;
      gone[v] = true;
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Treewidth by the recurrence TW(S) = min over v in S of
// max(TW(S - v), |Q(S - v, v)|) over all vertex subsets S, where Q(S, v) is the
// set of vertices outside S reachable from v through S.
inline int treewidth_by_subsets(const graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return -1;
  const auto adj = adjacency_matrix(g);
  auto q_size = [&](std::uint32_t s, int v) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{v};
    seen[v] = true;
    int count = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        if (!adj[x][y] || seen[y]) continue;
        seen[y] = true;
        if (s >> y & 1U) stack.push_back(y);
        else ++count;
      }
    }
    return count;
  };
  std::vector<int> tw(std::size_t{1} << n, n);
  tw[0] = -1;
  for (std::uint32_t s = 1; s < (1U << n); ++s)
    for (int v = 0; v < n; ++v)
      if (s >> v & 1U) {
        const std::uint32_t rest = s & ~(1U << v);
        tw[s] = std::min(tw[s], std::max(tw[rest], q_size(rest, v)));
      }
  return tw[(1U << n) - 1];
}

inline bool crosses(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

// Stack number over every vertex order (no symmetry pruning); colourings are
// tried edge by edge in input order.
inline bool colour_edges(const std::vector<std::pair<int, int>>& spans, std::vector<int>& colour, std::size_t i,
                         int k) {
  if (i == spans.size()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j)
      if (colour[j] == c && crosses(spans[i].first, spans[i].second, spans[j].first, spans[j].second)) ok = false;
    if (!ok) continue;
    colour[i] = c;
    if (colour_edges(spans, colour, i + 1, k)) return true;
  }
  return false;
}

inline int stack_number_brute_force(const graph& g) {
  const int n = g.vertex_count();
  const auto edges = g.edges();
  if (edges.empty()) return 0;
  std::vector<int> perm(n);
  int best = static_cast<int>(edges.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    std::vector<std::pair<int, int>> spans;
    for (auto [u, v] : edges) spans.emplace_back(pos[u], pos[v]);
    std::vector<int> colour(spans.size(), -1);
    for (int k = 1; k < best; ++k)
      if (colour_edges(spans, colour, 0, k)) {
        best = k;
        break;
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline graph random_small_graph(std::mt19937_64& rng, int max_n, std::size_t max_m) {
  std::uniform_int_distribution<int> size(1, max_n);
  const int n = size(rng);
  std::vector<lingrowth::edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> count(0, std::min(max_m, all.size()));
  all.resize(count(rng));
  return graph(n, all);
}

}  // namespace oracle
