#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lingrowth/error.hpp"

namespace lingrowth {

using vertex = int;
using vertex_set = std::vector<vertex>;  // sorted, duplicate free
using edge = std::pair<vertex, vertex>;  // first < second

inline constexpr int unreachable = -1;

// Finite simple undirected graph on vertices [0, n). Adjacency is stored in CSR
// form with strictly increasing neighbor lists; the object never changes after
// construction.
class graph {
 public:
  graph() = default;

  explicit graph(int n) : offsets_(static_cast<std::size_t>(n) + 1, 0) {
    if (n < 0) throw range_error("negative vertex count");
  }

  // Duplicate edges (in either orientation) are merged.
  graph(int n, std::span<const edge> edges) {
    if (n < 0) throw range_error("negative vertex count");
    std::vector<edge> arcs;
    arcs.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw range_error("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} has an endpoint outside [0," + std::to_string(n) + ")");
      }
      if (u == v) throw structure_error("self-loop at vertex " + std::to_string(u));
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    targets_.reserve(arcs.size());
    for (auto [u, v] : arcs) {
      ++offsets_[static_cast<std::size_t>(u) + 1];
      targets_.push_back(v);
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  }

  graph(int n, const std::vector<edge>& edges)
      : graph(n, std::span<const edge>(edges.data(), edges.size())) {}

  int vertex_count() const noexcept {
    return offsets_.empty() ? 0 : static_cast<int>(offsets_.size() - 1);
  }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  bool empty() const noexcept { return vertex_count() == 0; }

  std::span<const vertex> neighbors(vertex v) const {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {targets_.data() + b, e - b};
  }

  int degree(vertex v) const { return static_cast<int>(neighbors(v).size()); }

  int max_degree() const {
    int best = 0;
    for (vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
    return best;
  }

  bool adjacent(vertex u, vertex v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool contains(vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

  // Edges with u < v in lexicographic order.
  std::vector<edge> edges() const {
    std::vector<edge> out;
    out.reserve(edge_count());
    for (vertex u = 0; u < vertex_count(); ++u) {
      for (vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const graph& a, const graph& b) {
    return a.vertex_count() == b.vertex_count() && a.targets_ == b.targets_ &&
           (a.vertex_count() == 0 || a.offsets_ == b.offsets_);
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<vertex> targets_;
};

inline void require_vertex(const graph& g, vertex v) {
  if (!g.contains(v)) {
    throw range_error("vertex " + std::to_string(v) + " not in [0," +
                      std::to_string(g.vertex_count()) + ")");
  }
}

// --- edge-list text format ------------------------------------------------

inline graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int n = -1;
  std::vector<edge> edges;
  auto fail = [&](const std::string& why) -> parse_error {
    return parse_error("line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line.substr(first));
    if (n < 0) {
      std::string tag;
      long long nn = -1, mm = -1;
      fields >> tag >> nn >> mm;
      std::string extra;
      if (tag != "p" || fields.fail() || nn < 0 || mm < 0 || (fields >> extra)) {
        throw fail("expected header 'p <n> <m>'");
      }
      if (nn > std::numeric_limits<int>::max()) throw fail("vertex count too large");
      n = static_cast<int>(nn);
      continue;
    }
    long long u = 0, v = 0;
    std::string extra;
    fields >> u >> v;
    if (fields.fail() || (fields >> extra)) throw fail("expected '<u> <v>'");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw range_error("line " + std::to_string(line_no) + ": vertex id out of range [0," +
                        std::to_string(n) + ")");
    }
    if (u == v) {
      throw structure_error("line " + std::to_string(line_no) + ": self-loop at vertex " +
                            std::to_string(u));
    }
    edges.emplace_back(static_cast<vertex>(std::min(u, v)), static_cast<vertex>(std::max(u, v)));
  }
  if (n < 0) throw parse_error("line " + std::to_string(line_no) + ": missing header 'p <n> <m>'");
  return graph(n, edges);
}

inline graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string serialize_edge_list(const graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// --- vertex sets ------------------------------------------------------------

inline vertex_set all_vertices(const graph& g) {
  vertex_set out(static_cast<std::size_t>(g.vertex_count()));
  for (vertex v = 0; v < g.vertex_count(); ++v) out[static_cast<std::size_t>(v)] = v;
  return out;
}

inline vertex_set set_union(const vertex_set& a, const vertex_set& b) {
  vertex_set out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline vertex_set set_intersection(const vertex_set& a, const vertex_set& b) {
  vertex_set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline vertex_set set_difference(const vertex_set& a, const vertex_set& b) {
  vertex_set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline vertex_set normalized(vertex_set s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Membership mask over V(g) for a vertex subset.
class vertex_mask {
 public:
  vertex_mask(const graph& g, const vertex_set& members)
      : bits_(static_cast<std::size_t>(g.vertex_count()), 0) {
    for (vertex v : members) bits_[static_cast<std::size_t>(v)] = 1;
  }
  explicit vertex_mask(const graph& g)
      : bits_(static_cast<std::size_t>(g.vertex_count()), 1) {}

  bool operator[](vertex v) const { return bits_[static_cast<std::size_t>(v)] != 0; }

 private:
  std::vector<unsigned char> bits_;
};

// --- BFS primitives -------------------------------------------------------

struct layer_structure {
  vertex center = 0;
  std::vector<vertex_set> layers;  // layers[i] = vertices at distance exactly i
  int eccentricity = 0;            // p = layers.size() - 1
};

namespace detail {

// BFS inside the subgraph induced by `inside`, reusing caller-provided scratch.
// Fills dist for reached vertices (others keep `unreachable`) and returns the
// visit order.
inline void bfs_within(const graph& g, vertex source, const vertex_mask& inside,
                       std::vector<int>& dist, std::vector<vertex>& order) {
  order.clear();
  dist[static_cast<std::size_t>(source)] = 0;
  order.push_back(source);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const vertex u = order[head];
    const int du = dist[static_cast<std::size_t>(u)];
    for (vertex w : g.neighbors(u)) {
      if (inside[w] && dist[static_cast<std::size_t>(w)] == unreachable) {
        dist[static_cast<std::size_t>(w)] = du + 1;
        order.push_back(w);
      }
    }
  }
}

inline layer_structure layers_within(const graph& g, vertex source, const vertex_mask& inside) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), unreachable);
  std::vector<vertex> order;
  bfs_within(g, source, inside, dist, order);
  layer_structure out;
  out.center = source;
  for (vertex v : order) {
    const auto d = static_cast<std::size_t>(dist[static_cast<std::size_t>(v)]);
    if (out.layers.size() <= d) out.layers.resize(d + 1);
    out.layers[d].push_back(v);
  }
  for (auto& layer : out.layers) std::sort(layer.begin(), layer.end());
  out.eccentricity = static_cast<int>(out.layers.size()) - 1;
  return out;
}

}  // namespace detail

inline std::vector<int> distances_from(const graph& g, vertex source) {
  require_vertex(g, source);
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), unreachable);
  std::vector<vertex> order;
  detail::bfs_within(g, source, vertex_mask(g), dist, order);
  return dist;
}

inline layer_structure bfs_layers(const graph& g, vertex v) {
  require_vertex(g, v);
  return detail::layers_within(g, v, vertex_mask(g));
}

inline vertex_set ball(const graph& g, vertex v, int r) {
  require_vertex(g, v);
  if (r < 0) throw range_error("negative radius");
  const auto dist = distances_from(g, v);
  vertex_set out;
  for (vertex w = 0; w < g.vertex_count(); ++w) {
    const int d = dist[static_cast<std::size_t>(w)];
    if (d != unreachable && d <= r) out.push_back(w);
  }
  return out;
}

inline int eccentricity(const graph& g, vertex v) { return bfs_layers(g, v).eccentricity; }

// Components of g[members], each sorted; ordered by (size, smallest id).
inline std::vector<vertex_set> components(const graph& g, const vertex_set& members) {
  const vertex_mask inside(g, members);
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), unreachable);
  std::vector<vertex> order;
  std::vector<vertex_set> out;
  for (vertex v : members) {
    if (dist[static_cast<std::size_t>(v)] != unreachable) continue;
    detail::bfs_within(g, v, inside, dist, order);
    vertex_set comp(order.begin(), order.end());
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const vertex_set& a, const vertex_set& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return out;
}

inline std::vector<vertex_set> components(const graph& g) {
  return components(g, all_vertices(g));
}

inline bool is_connected(const graph& g, const vertex_set& members) {
  if (members.empty()) return false;
  return components(g, members).size() == 1;
}

inline bool is_connected(const graph& g) { return is_connected(g, all_vertices(g)); }

inline bool is_tree(const graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count()) &&
         is_connected(g);
}

// Subgraph induced by `members`, relabelled so that members[i] becomes i.
inline graph induced_subgraph(const graph& g, const vertex_set& members) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) index[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  std::vector<edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (vertex w : g.neighbors(members[i])) {
      const int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<vertex>(i), j);
    }
  }
  return graph(static_cast<int>(members.size()), edges);
}

}  // namespace lingrowth
