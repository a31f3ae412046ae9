#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lingrowth/decomposition.hpp"
#include "lingrowth/error.hpp"
#include "lingrowth/graph.hpp"

namespace lingrowth {

inline constexpr int exact_treewidth_default_limit = 18;

struct treewidth_result {
  int width = -1;
  tree_decomposition witness;
  std::vector<vertex> elimination_order;
};

namespace detail {

using vmask = std::uint64_t;

inline vmask bit(vertex v) { return vmask{1} << v; }

// Q(S, v): vertices outside S ∪ {v} reachable from v through S. Its size is
// the degree of v when it is eliminated right after the vertices of S.
inline vmask elimination_neighbourhood(const std::vector<vmask>& adj, vmask eliminated, vertex v) {
  vmask reach = bit(v), frontier = bit(v);
  while (frontier != 0) {
    vmask next = 0;
    for (vmask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= eliminated & ~reach;
    reach |= next;
    frontier = next;
  }
  vmask out = 0;
  for (vmask f = reach; f != 0; f &= f - 1) out |= adj[static_cast<std::size_t>(std::countr_zero(f))];
  return out & ~eliminated & ~bit(v);
}

// Largest minimum degree over all subgraphs; a lower bound on treewidth.
inline int degeneracy(const std::vector<vmask>& adj, int n) {
  vmask alive = n == 64 ? ~vmask{0} : (vmask{1} << n) - 1;
  int best = 0;
  while (alive != 0) {
    int min_deg = 65;
    vertex arg = 0;
    for (vmask f = alive; f != 0; f &= f - 1) {
      const vertex v = std::countr_zero(f);
      const int d = std::popcount(adj[static_cast<std::size_t>(v)] & alive);
      if (d < min_deg) {
        min_deg = d;
        arg = v;
      }
    }
    best = std::max(best, min_deg);
    alive &= ~bit(arg);
  }
  return best;
}

// Is there an elimination order in which every vertex has at most k
// neighbours left? States are eliminated prefixes (as sets); failed states are
// memoized, successful ones record the vertex that extends them.
class elimination_search {
 public:
  elimination_search(const std::vector<vmask>& adj, int n, int k) : adj_(adj), n_(n), k_(k) {
    full_ = n == 64 ? ~vmask{0} : (vmask{1} << n) - 1;
  }

  bool solve() { return feasible(0); }

  std::vector<vertex> order() const {
    std::vector<vertex> out;
    vmask state = 0;
    while (std::popcount(full_ & ~state) > k_ + 1) {
      const vertex v = next_.at(state);
      out.push_back(v);
      state |= bit(v);
    }
    for (vmask f = full_ & ~state; f != 0; f &= f - 1) out.push_back(std::countr_zero(f));
    return out;
  }

 private:
  bool feasible(vmask eliminated) {
    // The last k+1 vertices always fit in one bag.
    if (std::popcount(full_ & ~eliminated) <= k_ + 1) return true;
    if (dead_.count(eliminated)) return false;
    if (auto it = next_.find(eliminated); it != next_.end()) return true;

    // Neighbourhoods in the graph left after eliminating `eliminated`.
    std::vector<vmask> q(static_cast<std::size_t>(n_), 0);
    for (vmask f = full_ & ~eliminated; f != 0; f &= f - 1) {
      const vertex v = std::countr_zero(f);
      q[static_cast<std::size_t>(v)] = elimination_neighbourhood(adj_, eliminated, v);
    }
    auto clique = [&](vmask set) {
      for (vmask f = set; f != 0; f &= f - 1) {
        const vertex u = std::countr_zero(f);
        if ((set & ~bit(u) & ~q[static_cast<std::size_t>(u)]) != 0) return false;
      }
      return true;
    };
    // A simplicial or almost simplicial vertex of degree <= k can go first.
    // Every k tried is a lower bound on the treewidth, which makes the
    // almost simplicial rule safe.
    for (vmask f = full_ & ~eliminated; f != 0; f &= f - 1) {
      const vertex v = std::countr_zero(f);
      const vmask nv = q[static_cast<std::size_t>(v)];
      if (std::popcount(nv) > k_) continue;
      bool safe = clique(nv);
      for (vmask g = nv; g != 0 && !safe; g &= g - 1) safe = clique(nv & ~bit(std::countr_zero(g)));
      if (!safe) continue;
      if (feasible(eliminated | bit(v))) {
        next_[eliminated] = v;
        return true;
      }
      dead_[eliminated] = 1;
      return false;
    }

    for (vmask f = full_ & ~eliminated; f != 0; f &= f - 1) {
      const vertex v = std::countr_zero(f);
      if (std::popcount(q[static_cast<std::size_t>(v)]) > k_) continue;
      if (feasible(eliminated | bit(v))) {
        next_[eliminated] = v;
        return true;
      }
    }
    dead_[eliminated] = 1;
    return false;
  }

  const std::vector<vmask>& adj_;
  int n_;
  int k_;
  vmask full_ = 0;
  std::unordered_map<vmask, vertex> next_;
  std::unordered_map<vmask, char> dead_;
};

}  // namespace detail

// Decomposition induced by an elimination order: vertex v gets the bag
// {v} ∪ Q(prefix, v), hung below the bag of the earliest-eliminated vertex of
// Q(prefix, v). Roots of different components are chained together.
inline tree_decomposition decomposition_from_elimination(const graph& g, const std::vector<vertex>& order) {
  const int n = g.vertex_count();
  tree_decomposition td;
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }
  if (n > 64) throw capacity_error("elimination decompositions are limited to 64 vertices");
  std::vector<detail::vmask> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= detail::bit(v);
    adj[static_cast<std::size_t>(v)] |= detail::bit(u);
  }
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  detail::vmask eliminated = 0;
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    const vertex v = order[static_cast<std::size_t>(i)];
    const auto q = detail::elimination_neighbourhood(adj, eliminated, v);
    vertex_set bag{v};
    int parent = -1;
    for (auto f = q; f != 0; f &= f - 1) {
      const vertex w = std::countr_zero(f);
      bag.push_back(w);
      if (parent < 0 || position[static_cast<std::size_t>(w)] < parent) parent = position[static_cast<std::size_t>(w)];
    }
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    if (parent >= 0) {
      td.edges.emplace_back(i, parent);
    } else {
      if (previous_root >= 0) td.edges.emplace_back(previous_root, i);
      previous_root = i;
    }
    eliminated |= detail::bit(v);
  }
  return td;
}

// Exact treewidth by iterative deepening over k, each round a memoized search
// over elimination prefixes. Exponential; refuses graphs above `vertex_limit`.
inline treewidth_result exact_treewidth(const graph& g, int vertex_limit = exact_treewidth_default_limit) {
  const int n = g.vertex_count();
  if (n > vertex_limit || n > 64) {
    throw capacity_error("exact treewidth is limited to " + std::to_string(std::min(vertex_limit, 64)) +
                         " vertices, got " + std::to_string(n));
  }
  treewidth_result out;
  if (n == 0) {
    out.witness.bags.emplace_back();
    return out;
  }
  std::vector<detail::vmask> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= detail::bit(v);
    adj[static_cast<std::size_t>(v)] |= detail::bit(u);
  }
  for (int k = detail::degeneracy(adj, n);; ++k) {
    detail::elimination_search search(adj, n, k);
    if (search.solve()) {
      out.width = k;
      out.elimination_order = search.order();
      out.witness = decomposition_from_elimination(g, out.elimination_order);
      break;
    }
  }
  // The order may realise a smaller width than k only if k was not minimal.
  const int realised = out.witness.width();
  if (realised != out.width) {
    throw invariant_error("elimination order realises width " + std::to_string(realised) + ", expected " +
                          std::to_string(out.width));
  }
  return out;
}

}  // namespace lingrowth
