#include <gtest/gtest.h>

#include <random>

#include "lingrowth/generators.hpp"
#include "lingrowth/growth.hpp"
#include "lingrowth/separators.hpp"
#include "oracles.hpp"

using namespace lingrowth;

TEST(CheckSeparation, Examples) {
  const auto p3 = path_graph(3);
  const auto v = all_vertices(p3);
  const auto whole = check_separation(p3, v, separation{v, v, 3}, rational(2, 3));
  EXPECT_TRUE(whole.valid);
  EXPECT_EQ(whole.order, 3);
  EXPECT_EQ(whole.alpha_achieved, rational(1));
  const auto mid = check_separation(p3, v, separation{{0, 1}, {1, 2}, 3}, rational(2, 3));
  EXPECT_TRUE(mid.valid);
  EXPECT_EQ(mid.order, 1);
  EXPECT_EQ(mid.alpha_achieved, rational(2, 3));
  EXPECT_FALSE(check_separation(p3, v, separation{{0}, {2}, 3}, rational(2, 3)).valid);
  EXPECT_FALSE(check_separation(p3, v, separation{{0, 1}, {2}, 3}, rational(2, 3)).valid);
}

TEST(BfsLayerSeparation, Path7) {
  const auto g = path_graph(7);
  const auto [sep, trace] = bfs_layer_separation(g, all_vertices(g), 3);
  EXPECT_EQ(trace.center, 3);
  EXPECT_EQ(trace.thin, (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(trace.thick.empty());
  EXPECT_EQ(trace.j, 2);
  EXPECT_EQ(sep.a, (vertex_set{1, 2, 3, 4, 5}));
  EXPECT_EQ(sep.b, (vertex_set{0, 1, 5, 6}));
  const auto report = check_separation(g, all_vertices(g), sep, rational(11, 12));
  EXPECT_TRUE(report.valid);
  EXPECT_EQ(report.order, 2);
  EXPECT_EQ(std::max(report.a_only, report.b_only), 3);
  EXPECT_TRUE(report.within_alpha);
}

TEST(BfsLayerSeparation, Path2) {
  const auto g = path_graph(2);
  const auto [sep, trace] = bfs_layer_separation(g, {0, 1}, 2);
  EXPECT_EQ(trace.thin, (std::vector<int>{1}));
  EXPECT_EQ(trace.j, 1);
  EXPECT_EQ(sep.a, (vertex_set{0, 1}));
  EXPECT_EQ(sep.b, (vertex_set{1}));
  EXPECT_EQ(sep.order(), 1);
}

TEST(BfsLayerSeparation, Cycle6) {
  const auto g = cycle_graph(6);
  const auto [sep, trace] = bfs_layer_separation(g, all_vertices(g), 3);
  EXPECT_EQ(trace.layer_sizes, (std::vector<int>{1, 2, 2, 1}));
  EXPECT_EQ(trace.thin, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(trace.j, 2);
  EXPECT_EQ(sep.order(), 2);
}

TEST(BfsLayerSeparation, Errors) {
  const auto g = path_graph(4);
  EXPECT_THROW(bfs_layer_separation(g, {0, 2}, 2), precondition_error);
  EXPECT_THROW(bfs_layer_separation(g, {1}, 2), degenerate_error);
  EXPECT_THROW(bfs_layer_separation(g, {0, 1}, rational(1, 2)), precondition_error);
}

// On random connected subgraphs, with c at least the growth constant of the
// subgraph, the separation meets the bounds it is designed for.
TEST(BfsLayerSeparation, BoundsOnRandomConnectedGraphs) {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 80) {
    const auto g = oracle::random_small_graph(rng, 14, 30);
    for (const auto& comp : components(g)) {
      if (comp.size() < 2) continue;
      const auto h = induced_subgraph(g, comp);
      const rational c = std::max(rational(1), growth_constant(h));
      const auto [sep, trace] = bfs_layer_separation(g, comp, c);
      const auto rep = check_separation(g, comp, sep, 1 - 1 / (4 * c));
      ASSERT_TRUE(rep.valid) << rep.failure;
      EXPECT_LT(rational(rep.order), 2 * c);
      EXPECT_TRUE(rep.within_alpha);
      EXPECT_LE(2 * trace.thick.size(), static_cast<std::size_t>(trace.p));
      ++checked;
    }
  }
}

TEST(SeparatePossiblyDisconnected, TwoPaths) {
  const graph g(8, std::vector<edge>{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}});
  const auto oracle_fn = layer_oracle(g, 3);
  const auto s = separate_possibly_disconnected(g, all_vertices(g), rational(11, 12), oracle_fn);
  EXPECT_EQ(s.a, (vertex_set{4, 5, 6, 7}));
  EXPECT_EQ(s.b, (vertex_set{0, 1, 2, 3}));
  EXPECT_EQ(s.order(), 0);
}

TEST(SeparatePossiblyDisconnected, ConnectedDelegates) {
  const auto g = path_graph(7);
  const auto oracle_fn = layer_oracle(g, 3);
  const auto direct = oracle_fn(all_vertices(g));
  const auto lifted = separate_possibly_disconnected(g, all_vertices(g), rational(11, 12), oracle_fn);
  EXPECT_EQ(lifted.a, direct.a);
  EXPECT_EQ(lifted.b, direct.b);
  EXPECT_THROW(separate_possibly_disconnected(g, all_vertices(g), rational(1, 2), oracle_fn), precondition_error);
}

TEST(SeparatePossiblyDisconnected, RandomForestsStayValid) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const auto g = oracle::random_small_graph(rng, 16, 14);
    const rational c = std::max(rational(1), growth_constant(g));
    const rational alpha = 1 - 1 / (4 * c);
    int oracle_max = 0;
    const auto connected = layer_oracle(g, c);
    const auto s = separate_possibly_disconnected(g, all_vertices(g), alpha, [&](const vertex_set& x) {
      auto r = connected(x);
      oracle_max = std::max(oracle_max, r.order());
      return r;
    });
    const auto rep = check_separation(g, all_vertices(g), s, alpha);
    ASSERT_TRUE(rep.valid) << rep.failure;
    EXPECT_TRUE(rep.within_alpha) << serialize_edge_list(g);
    EXPECT_LE(rep.order, oracle_max);
  }
}

TEST(RebalanceRoundCap, ExactPowering) {
  EXPECT_EQ(rebalance_round_cap(rational(11, 12)), 5);
  EXPECT_EQ(rebalance_round_cap(rational(2, 3)), 1);
  EXPECT_EQ(rebalance_round_cap(rational(3, 4)), 2);  // 3/4 > 2/3 >= 9/16
  for (int q = 4; q <= 40; ++q) {
    const rational alpha(q - 1, q);
    const int cap = rebalance_round_cap(alpha);
    rational power = 1;
    for (int i = 0; i < cap - 1; ++i) power *= alpha;
    EXPECT_GT(power, rational(2, 3));
    EXPECT_LE(power * alpha, rational(2, 3));
  }
}

TEST(Rebalance, AlreadyBalanced) {
  const auto g = path_graph(7);
  const auto r = rebalance_to_two_thirds(g, all_vertices(g), rational(11, 12), layer_oracle(g, 3));
  EXPECT_EQ(r.iterations, 1);
  EXPECT_EQ(r.update_rounds, 0);
  EXPECT_TRUE(check_separation(g, all_vertices(g), r.sep, rational(2, 3)).within_alpha);
}

TEST(Rebalance, OverrunningOracleIsReported) {
  const auto g = path_graph(30);
  // Splits off a single end vertex each time: never alpha-balanced.
  const separation_oracle lazy = [](const vertex_set& x) {
    return separation{{x.front()}, x, static_cast<int>(x.size())};
  };
  EXPECT_THROW(rebalance_to_two_thirds(g, all_vertices(g), rational(3, 4), lazy), invariant_error);
}

TEST(Rebalance, RandomGraphsMeetCapAndOrder) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const auto g = oracle::random_small_graph(rng, 18, 30);
    const rational c = std::max(rational(1), growth_constant(g));
    const rational alpha = 1 - 1 / (4 * c);
    const auto connected = layer_oracle(g, c);
    const separation_oracle lifted = [&](const vertex_set& x) {
      return separate_possibly_disconnected(g, x, alpha, connected);
    };
    const auto r = rebalance_to_two_thirds(g, all_vertices(g), alpha, lifted);
    const auto rep = check_separation(g, all_vertices(g), r.sep, rational(2, 3));
    ASSERT_TRUE(rep.valid) << rep.failure;
    EXPECT_TRUE(rep.within_alpha);
    EXPECT_LE(r.iterations, rebalance_round_cap(alpha));
    EXPECT_LE(rep.order, r.iterations * r.max_step_order);
  }
}
