#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lingrowth/error.hpp"
#include "lingrowth/graph.hpp"
#include "lingrowth/rational.hpp"

namespace lingrowth {

// f(r) for r = 1..r_max plus the exact growth constant over the scanned range.
//
// f(r) is computed as the largest r-ball. The induced subgraph on B_r(v) has
// radius at most r (shortest paths from v stay inside the ball) and any
// subgraph H of radius at most r centred at w has V(H) inside B_r(w) because
// distances in H dominate distances in G. brute_force_growth() checks this
// reduction against the subgraph definition on small graphs.
struct growth_profile {
  std::vector<std::int64_t> values;  // values[r-1] = f(r)
  int r_max = 0;
  rational growth_constant;  // max f(r)/r over r in [1, min(r_max, n)]
  int argmax_radius = 1;     // smallest r attaining growth_constant

  std::int64_t at(int r) const { return values.at(static_cast<std::size_t>(r - 1)); }
};

namespace detail {

// ball_max[r] = max_v |B_r(v)| for r in [0, r_cap]; saturated entries repeat.
inline std::vector<std::int64_t> max_ball_sizes(const graph& g, int r_cap) {
  const int n = g.vertex_count();
  std::vector<std::int64_t> best(static_cast<std::size_t>(r_cap) + 1, 0);
  std::vector<int> dist(static_cast<std::size_t>(n), unreachable);
  std::vector<vertex> order;
  std::vector<std::int64_t> per_layer;
  const vertex_mask everything(g);
  for (vertex v = 0; v < n; ++v) {
    bfs_within(g, v, everything, dist, order);
    per_layer.assign(static_cast<std::size_t>(r_cap) + 1, 0);
    for (vertex w : order) {
      const int d = dist[static_cast<std::size_t>(w)];
      if (d <= r_cap) ++per_layer[static_cast<std::size_t>(d)];
      dist[static_cast<std::size_t>(w)] = unreachable;
    }
    std::int64_t running = 0;
    for (std::size_t r = 0; r < per_layer.size(); ++r) {
      running += per_layer[r];
      best[r] = std::max(best[r], running);
    }
  }
  return best;
}

}  // namespace detail

inline growth_profile compute_growth_profile(const graph& g, int r_max) {
  if (g.empty()) throw domain_error("growth of the empty graph is undefined");
  if (r_max < 1) throw domain_error("r_max must be positive");
  const int n = g.vertex_count();
  // Balls stop growing once r reaches n - 1.
  const int r_cap = std::min(r_max, n);
  const auto best = detail::max_ball_sizes(g, r_cap);
  growth_profile out;
  out.r_max = r_max;
  out.values.resize(static_cast<std::size_t>(r_max));
  for (int r = 1; r <= r_max; ++r) {
    out.values[static_cast<std::size_t>(r - 1)] = best[static_cast<std::size_t>(std::min(r, r_cap))];
  }
  out.growth_constant = rational(out.values[0]);
  out.argmax_radius = 1;
  for (int r = 2; r <= r_cap; ++r) {
    const rational ratio(out.values[static_cast<std::size_t>(r - 1)], r);
    if (ratio > out.growth_constant) {
      out.growth_constant = ratio;
      out.argmax_radius = r;
    }
  }
  return out;
}

// Smallest c with f(r) <= c r for every r; the scan to r = n covers every
// radius since f is constant from there on.
inline rational growth_constant(const graph& g) {
  return compute_growth_profile(g, g.vertex_count()).growth_constant;
}

inline constexpr std::size_t brute_force_edge_limit = 20;

// Subgraph-definition oracle: the largest connected subgraph (any edge subset,
// any choice of extra isolated vertices) of radius <= r, for every
// r in [1, r_max]. Exponential; refuses graphs with more than 20 edges.
inline std::vector<std::int64_t> brute_force_growth_profile(const graph& g, int r_max) {
  const int n = g.vertex_count();
  if (g.edge_count() > brute_force_edge_limit || n > 64) {
    throw capacity_error("brute-force growth is limited to 20 edges, got " +
                         std::to_string(g.edge_count()));
  }
  if (n == 0) throw domain_error("growth of the empty graph is undefined");
  if (r_max < 1) throw domain_error("r_max must be positive");
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<std::int64_t> best(static_cast<std::size_t>(r_max) + 1, 0);

  // Radius of the graph (V(F), F) given as bitmasks; -1 when disconnected.
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  auto radius_of = [&](std::uint64_t verts, std::uint64_t chosen) -> int {
    std::fill(adj.begin(), adj.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (chosen >> i & 1U) {
        adj[static_cast<std::size_t>(edges[i].first)] |= std::uint64_t{1} << edges[i].second;
        adj[static_cast<std::size_t>(edges[i].second)] |= std::uint64_t{1} << edges[i].first;
      }
    }
    int radius = -1;
    for (std::uint64_t rest = verts; rest != 0; rest &= rest - 1) {
      const int s = std::countr_zero(rest);
      std::uint64_t seen = std::uint64_t{1} << s, frontier = seen;
      int ecc = 0;
      while (true) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= ~seen;
        if (next == 0) break;
        seen |= next;
        frontier = next;
        ++ecc;
      }
      if (seen != verts) return -1;
      if (radius < 0 || ecc < radius) radius = ecc;
    }
    return radius;
  };

  auto offer = [&](int size, int radius) {
    for (int r = std::max(radius, 1); r <= r_max; ++r)
      best[static_cast<std::size_t>(r)] = std::max<std::int64_t>(best[static_cast<std::size_t>(r)], size);
  };

  // F empty: H is a set of isolated vertices, connected only when it is a
  // single vertex.
  for (std::uint64_t iso = 1; iso < (std::uint64_t{1} << std::min(n, 20)); ++iso) {
    const int r = radius_of(iso, 0);
    if (r >= 0) offer(std::popcount(iso), r);
  }
  if (n > 20) offer(1, 0);

  // F nonempty: adding any isolated vertex disconnects H, so only V(H) = V(F)
  // can be connected.
  for (std::uint64_t chosen = 1; chosen < (std::uint64_t{1} << m); ++chosen) {
    std::uint64_t verts = 0;
    for (std::uint64_t f = chosen; f != 0; f &= f - 1) {
      const auto& e = edges[static_cast<std::size_t>(std::countr_zero(f))];
      verts |= (std::uint64_t{1} << e.first) | (std::uint64_t{1} << e.second);
    }
    const int size = std::popcount(verts);
    if (size <= best[1]) continue;  // best is nondecreasing, nothing to gain
    const int r = radius_of(verts, chosen);
    if (r >= 0) offer(size, r);
  }
  best.erase(best.begin());
  return best;
}

inline std::int64_t brute_force_growth(const graph& g, int r) {
  if (r < 1) throw domain_error("radius must be positive");
  return brute_force_growth_profile(g, r).back();
}

// A bound r -> value evaluated exactly. Throwing from the callable marks the
// bound as not evaluable at that radius.
using bound_function = std::function<rational(std::int64_t)>;

// Polynomial with rational coefficients, lowest degree first.
struct polynomial_bound {
  std::vector<rational> coefficients;

  rational operator()(std::int64_t r) const {
    rational acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * r + *it;
    return acc;
  }

  bool nondecreasing_on(std::int64_t lo, std::int64_t hi) const {
    for (std::int64_t r = lo; r < hi; ++r)
      if ((*this)(r + 1) < (*this)(r)) return false;
    return true;
  }

  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = coefficients.size(); d-- > 0;) {
      const rational& a = coefficients[d];
      if (a == 0) continue;
      if (!first) out << (a < 0 ? " - " : " + ");
      else if (a < 0) out << '-';
      const rational mag = a < 0 ? rational(-a) : a;
      if (d == 0 || mag != 1) out << lingrowth::to_string(mag);
      if (d >= 1) out << 'r';
      if (d >= 2) out << '^' << d;
      first = false;
    }
    if (first) out << '0';
    return out.str();
  }

  // "c0,c1,c2" means c0 + c1 r + c2 r^2.
  static polynomial_bound parse(const std::string& text) {
    polynomial_bound out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) out.coefficients.push_back(parse_rational(part));
    if (out.coefficients.empty()) throw parse_error("empty polynomial '" + text + "'");
    return out;
  }
};

// (slope) r + intercept.
inline polynomial_bound linear_bound(const rational& slope, const rational& intercept = 0) {
  return polynomial_bound{{intercept, slope}};
}

struct growth_violation {
  int r = 0;
  std::int64_t f = 0;
  rational bound;
};

struct growth_verdict {
  bool holds = true;
  std::optional<growth_violation> first_violation;
};

// Checks f_g(r) <= bound(r) for every r in [1, n]; beyond n f is constant and
// the bounds in use are nondecreasing.
inline growth_verdict verify_growth_bound(const graph& g, const bound_function& bound) {
  const auto profile = compute_growth_profile(g, g.vertex_count());
  growth_verdict out;
  for (int r = 1; r <= g.vertex_count(); ++r) {
    rational b;
    try {
      b = bound(r);
    } catch (const std::exception& e) {
      throw domain_error("bound not evaluable at r = " + std::to_string(r) + ": " + e.what());
    }
    if (rational(profile.at(r)) > b) {
      out.holds = false;
      out.first_violation = growth_violation{r, profile.at(r), b};
      return out;
    }
  }
  return out;
}

}  // namespace lingrowth
