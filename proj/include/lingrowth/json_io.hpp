#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "lingrowth/constructions.hpp"
#include "lingrowth/decomposition.hpp"
#include "lingrowth/error.hpp"
#include "lingrowth/graph.hpp"
#include "lingrowth/separators.hpp"
#include "lingrowth/stack_layout.hpp"

namespace lingrowth {

using json = nlohmann::ordered_json;

namespace detail {

template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string(what) + ": " + e.what());
  }
}

}  // namespace detail

// { "nodes": [{"id", "bag"}], "edges": [[x, y]], "width" }
inline json to_json(const tree_decomposition& td) {
  json nodes = json::array();
  for (int x = 0; x < td.node_count(); ++x) nodes.push_back({{"id", x}, {"bag", td.bags[static_cast<std::size_t>(x)]}});
  json edges = json::array();
  for (auto [x, y] : td.edges) edges.push_back({x, y});
  return {{"nodes", nodes}, {"edges", edges}, {"width", td.width()}};
}

// Node ids may appear in any order but must be exactly [0, #nodes).
inline tree_decomposition tree_decomposition_from_json(const json& j) {
  return detail::guarded("tree decomposition", [&] {
    tree_decomposition td;
    const auto& nodes = j.at("nodes");
    td.bags.resize(nodes.size());
    std::vector<char> seen(nodes.size(), 0);
    for (const auto& node : nodes) {
      const int id = node.at("id").get<int>();
      if (id < 0 || static_cast<std::size_t>(id) >= nodes.size() || seen[static_cast<std::size_t>(id)]) {
        throw parse_error("tree decomposition: node ids must be a permutation of [0, #nodes)");
      }
      seen[static_cast<std::size_t>(id)] = 1;
      td.bags[static_cast<std::size_t>(id)] = node.at("bag").get<vertex_set>();
    }
    for (const auto& e : j.at("edges")) td.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return td;
  });
}

// { "order": [...], "stacks": [{"u", "v", "stack"}], "k" }
inline json to_json(const stack_layout& layout) {
  json stacks = json::array();
  for (const auto& s : layout.stacks) stacks.push_back({{"u", s.u}, {"v", s.v}, {"stack", s.stack}});
  return {{"order", layout.order}, {"stacks", stacks}, {"k", layout.k}};
}

inline stack_layout stack_layout_from_json(const json& j) {
  return detail::guarded("stack layout", [&] {
    stack_layout layout;
    layout.order = j.at("order").get<std::vector<vertex>>();
    for (const auto& s : j.at("stacks")) {
      layout.stacks.push_back({s.at("u").get<vertex>(), s.at("v").get<vertex>(), s.at("stack").get<int>()});
    }
    layout.k = j.at("k").get<int>();
    return layout;
  });
}

// { "tree_edges": [[x, y]], "root", "k", "map": [{"v", "node", "copy"}] }
// The host tree has max(root, node ids) + 1 nodes.
inline json to_json(const host_embedding& emb) {
  json edges = json::array();
  for (auto [x, y] : emb.host_tree.edges()) edges.push_back({x, y});
  json map = json::array();
  for (std::size_t v = 0; v < emb.vertex_map.size(); ++v) {
    map.push_back({{"v", v}, {"node", emb.vertex_map[v].node}, {"copy", emb.vertex_map[v].copy}});
  }
  return {{"tree_edges", edges}, {"root", emb.root}, {"k", emb.k}, {"map", map}};
}

inline host_embedding host_embedding_from_json(const json& j) {
  return detail::guarded("host embedding", [&] {
    host_embedding emb;
    emb.root = j.at("root").get<int>();
    emb.k = j.at("k").get<int>();
    int nodes = emb.root + 1;
    std::vector<edge> tree_edges;
    for (const auto& e : j.at("tree_edges")) {
      const int x = e.at(0).get<int>(), y = e.at(1).get<int>();
      tree_edges.emplace_back(std::min(x, y), std::max(x, y));
      nodes = std::max({nodes, x + 1, y + 1});
    }
    const auto& map = j.at("map");
    emb.vertex_map.assign(map.size(), product_slot{-1, 0});
    for (const auto& entry : map) {
      const auto v = entry.at("v").get<long long>();
      if (v < 0 || static_cast<std::size_t>(v) >= map.size()) throw parse_error("host embedding: map vertex out of range");
      product_slot slot{entry.at("node").get<int>(), entry.at("copy").get<int>()};
      nodes = std::max(nodes, slot.node + 1);
      emb.vertex_map[static_cast<std::size_t>(v)] = slot;
    }
    for (const auto& slot : emb.vertex_map)
      if (slot.node < 0) throw parse_error("host embedding: map must list every vertex once");
    emb.host_tree = graph(nodes, tree_edges);
    return emb;
  });
}

inline json to_json(const subdivision_record& rec) {
  json lengths = json::array();
  for (std::size_t i = 0; i < rec.base_edges.size(); ++i) {
    lengths.push_back({{"u", rec.base_edges[i].first}, {"v", rec.base_edges[i].second}, {"length", rec.path_length[i]}});
  }
  json out = {
      {"mode", rec.host ? "host" : "uniform"},
      {"base", {{"n", rec.base.vertex_count()}, {"m", rec.base.edge_count()}}},
      {"path_lengths", lengths},
      {"result", {{"n", rec.result.vertex_count()}, {"m", rec.result.edge_count()}}},
  };
  if (rec.host) {
    const auto& h = *rec.host;
    out["host"] = {{"gamma", h.gamma},       {"ell", h.ell}, {"g_table", h.g_table},
                   {"epsilon", to_string(h.epsilon)}, {"k", h.k},   {"max_degree", h.max_degree}};
  }
  if (rec.uniform) {
    const auto& u = *rec.uniform;
    out["uniform"] = {{"ell", u.ell}, {"m", u.m}, {"n", u.n}, {"max_degree", u.max_degree}};
  }
  return out;
}

inline json to_json(const separation_report& r) {
  json out = {{"valid", r.valid},
              {"order", r.order},
              {"alpha_achieved", to_string(r.alpha_achieved)},
              {"exclusive_alpha", to_string(r.exclusive_alpha)},
              {"within_alpha", r.within_alpha},
              {"sides", {r.a_only, r.both, r.b_only}}};
  if (!r.failure.empty()) out["failure"] = r.failure;
  return out;
}

inline json to_json(const layer_split_trace& t) {
  return {{"center", t.center}, {"p", t.p}, {"layer_sizes", t.layer_sizes}, {"R", t.thick},
          {"S", t.thin},        {"j", t.j}, {"c", to_string(t.c)},          {"thin_set_empty", t.thin_set_empty}};
}

inline json to_json(const separation& s) { return {{"A", s.a}, {"B", s.b}, {"order", s.order()}}; }

}  // namespace lingrowth
