#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lingrowth/error.hpp"
#include "lingrowth/graph.hpp"

namespace lingrowth {

enum class family { path, cycle, star, complete, complete_binary_tree, grid };

inline std::string_view family_name(family f) {
  switch (f) {
    case family::path: return "path";
    case family::cycle: return "cycle";
    case family::star: return "star";
    case family::complete: return "complete";
    case family::complete_binary_tree: return "complete_binary_tree";
    case family::grid: return "grid";
  }
  return "?";
}

// Row-major numbering of the n x n grid: (row, col) in [0,n)^2 <-> row*n + col.
struct grid_coordinates {
  int n = 0;

  vertex index(int row, int col) const { return row * n + col; }
  std::pair<int, int> coords(vertex v) const { return {v / n, v % n}; }
};

namespace detail {

inline void require_size(bool ok, std::string_view what, long long size) {
  if (!ok) throw range_error(std::string(what) + ": invalid size " + std::to_string(size));
}

}  // namespace detail

// Star and complete binary tree take the vertex count; grid takes the side
// length. Trees are numbered root-first in breadth-first (heap) order.
inline graph generate(family f, int size) {
  std::vector<edge> edges;
  switch (f) {
    case family::path:
      detail::require_size(size >= 1, "path", size);
      for (vertex v = 0; v + 1 < size; ++v) edges.emplace_back(v, v + 1);
      return graph(size, edges);
    case family::cycle:
      detail::require_size(size >= 3, "cycle", size);
      for (vertex v = 0; v + 1 < size; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(0, size - 1);
      return graph(size, edges);
    case family::star:
      detail::require_size(size >= 1, "star", size);
      for (vertex v = 1; v < size; ++v) edges.emplace_back(0, v);
      return graph(size, edges);
    case family::complete:
      detail::require_size(size >= 1 && size <= 20000, "complete", size);
      for (vertex u = 0; u < size; ++u)
        for (vertex v = u + 1; v < size; ++v) edges.emplace_back(u, v);
      return graph(size, edges);
    case family::complete_binary_tree:
      detail::require_size(size >= 1, "complete_binary_tree", size);
      for (vertex v = 1; v < size; ++v) edges.emplace_back((v - 1) / 2, v);
      return graph(size, edges);
    case family::grid: {
      detail::require_size(size >= 1 && size <= 46340, "grid", size);
      const grid_coordinates at{size};
      for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) {
          if (c + 1 < size) edges.emplace_back(at.index(r, c), at.index(r, c + 1));
          if (r + 1 < size) edges.emplace_back(at.index(r, c), at.index(r + 1, c));
        }
      }
      return graph(size * size, edges);
    }
  }
  throw range_error("unknown family");
}

inline graph path_graph(int n) { return generate(family::path, n); }
inline graph cycle_graph(int n) { return generate(family::cycle, n); }
inline graph star_graph(int n) { return generate(family::star, n); }
inline graph complete_graph(int n) { return generate(family::complete, n); }
inline graph grid_graph(int side) { return generate(family::grid, side); }

// Vertex (v, w) gets id v*|V(h)| + w. Iterating gives the nested mixed-radix
// numbering for triple products.
inline graph strong_product(const graph& g, const graph& h) {
  if (g.empty() || h.empty()) throw range_error("strong product of an empty graph");
  const long long total = static_cast<long long>(g.vertex_count()) * h.vertex_count();
  if (total > std::numeric_limits<int>::max() / 2) {
    throw capacity_error("strong product would have " + std::to_string(total) + " vertices");
  }
  const int nh = h.vertex_count();
  auto id = [nh](vertex v, vertex w) { return v * nh + w; };
  std::vector<edge> edges;
  for (vertex v = 0; v < g.vertex_count(); ++v) {
    for (vertex w = 0; w < nh; ++w) {
      // v' = v, w' ~ w
      for (vertex w2 : h.neighbors(w))
        if (w < w2) edges.emplace_back(id(v, w), id(v, w2));
      for (vertex v2 : g.neighbors(v)) {
        if (v2 < v) continue;
        // v' ~ v, w' = w or w' ~ w
        edges.emplace_back(id(v, w), id(v2, w));
        for (vertex w2 : h.neighbors(w)) edges.emplace_back(id(v, w), id(v2, w2));
      }
    }
  }
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  return graph(static_cast<int>(total), edges);
}

inline graph blow_up(const graph& g, int t) {
  if (t < 1) throw range_error("blow-up factor must be >= 1");
  return strong_product(g, complete_graph(t));
}

// P_n ⊠ P_n and P_n ⊠ P_n ⊠ P_n.
inline graph path_product(int n, int factors) {
  if (factors < 1) throw range_error("need at least one factor");
  graph out = path_graph(n);
  for (int i = 1; i < factors; ++i) out = strong_product(out, path_graph(n));
  return out;
}

namespace detail {

// Uniform draw in [0, bound) from a 64-bit engine. Written out rather than
// using std::uniform_int_distribution so that seeds reproduce across
// standard libraries.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[draw_below(rng, i)]);
  }
}

}  // namespace detail

inline constexpr int random_cubic_attempts = 100000;

// Configuration model; samples containing a loop or a repeated pair are
// discarded whole.
inline graph random_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw range_error("random_cubic needs an even n >= 4, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<vertex> points(static_cast<std::size_t>(3 * n));
  for (int attempt = 0; attempt < random_cubic_attempts; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<vertex>(i / 3);
    detail::shuffle(points, rng);
    std::vector<edge> edges;
    edges.reserve(points.size() / 2);
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      vertex u = points[i], v = points[i + 1];
      if (u == v) simple = false;
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return graph(n, edges);
  }
  throw generation_error("random_cubic(" + std::to_string(n) + "): no simple pairing within " +
                         std::to_string(random_cubic_attempts) + " attempts");
}

// Uniform labelled tree from a random Prüfer sequence.
inline graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw range_error("random_tree needs n >= 1");
  if (n <= 2) return path_graph(n);
  std::mt19937_64 rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& x : code) x = static_cast<int>(detail::draw_below(rng, static_cast<std::uint64_t>(n)));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : code) ++degree[static_cast<std::size_t>(x)];
  std::vector<edge> edges;
  // Linear-time decoding with a moving pointer to the smallest leaf.
  int ptr = 0;
  while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int x : code) {
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    if (--degree[static_cast<std::size_t>(x)] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
  return graph(n, edges);
}

// G(n, p) with p = num/den; used for randomized test corpora.
inline graph random_graph(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<edge> edges;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      if (detail::draw_below(rng, den) < num) edges.emplace_back(u, v);
  return graph(n, edges);
}

}  // namespace lingrowth
