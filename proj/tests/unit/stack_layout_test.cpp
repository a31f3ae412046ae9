#include <gtest/gtest.h>

#include <random>

#include "lingrowth/decomposition.hpp"
#include "lingrowth/generators.hpp"
#include "lingrowth/growth.hpp"
#include "lingrowth/stack_layout.hpp"
#include "lingrowth/treewidth.hpp"
#include "oracles.hpp"

using namespace lingrowth;

namespace {

stack_layout one_stack(const graph& g) {
  stack_layout l;
  l.order = all_vertices(g);
  l.k = 1;
  for (auto [u, v] : g.edges()) l.stacks.push_back({u, v, 1});
  return l;
}

}  // namespace

TEST(CheckStackLayout, Examples) {
  EXPECT_TRUE(check_stack_layout(cycle_graph(4), one_stack(cycle_graph(4))).valid);
  const auto k4 = complete_graph(4);
  auto single = one_stack(k4);
  const auto bad = check_stack_layout(k4, single);
  ASSERT_FALSE(bad.valid);
  EXPECT_EQ(bad.first_crossing->first.u, 0);
  EXPECT_EQ(bad.first_crossing->first.v, 2);
  EXPECT_EQ(bad.first_crossing->second.u, 1);
  EXPECT_EQ(bad.first_crossing->second.v, 3);
  for (auto& s : single.stacks)
    if (s.u == 1 && s.v == 3) s.stack = 2;
  single.k = 2;
  EXPECT_TRUE(check_stack_layout(k4, single).valid);
}

TEST(CheckStackLayout, CoverageMismatch) {
  const auto k4 = complete_graph(4);
  auto l = one_stack(k4);
  l.stacks.pop_back();
  EXPECT_THROW(check_stack_layout(k4, l), structure_error);
}

TEST(Interleave, AgreesWithOracle) {
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d)
          EXPECT_EQ(interleave({a, b}, {c, d}), oracle::crosses(a, b, c, d));
}

TEST(ExactStackNumber, Examples) {
  EXPECT_EQ(exact_stack_number(graph(5)).k, 0);
  EXPECT_EQ(exact_stack_number(random_tree(8, 4)).k, 1);
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(exact_stack_number(cycle_graph(n)).k, 1);
  EXPECT_EQ(exact_stack_number(complete_graph(4)).k, 2);
  EXPECT_EQ(exact_stack_number(complete_graph(5)).k, 3);
  EXPECT_EQ(exact_stack_number(complete_graph(6)).k, 3);
  EXPECT_THROW(exact_stack_number(path_graph(9)), capacity_error);
}

TEST(ExactStackNumber, AgreesWithUnprunedSearch) {
  for (int n = 4; n <= 6; ++n) EXPECT_EQ(exact_stack_number(complete_graph(n)).k, oracle::stack_number_brute_force(complete_graph(n)));
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    const auto g = oracle::random_small_graph(rng, 6, 15);
    const auto r = exact_stack_number(g);
    EXPECT_EQ(r.k, oracle::stack_number_brute_force(g)) << serialize_edge_list(g);
    EXPECT_TRUE(check_stack_layout(g, r.witness).valid);
  }
}

TEST(ExactStackNumber, MonotoneUnderSubgraphs) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const auto g = oracle::random_small_graph(rng, 6, 15);
    auto edges = g.edges();
    if (edges.empty()) continue;
    edges.pop_back();
    EXPECT_LE(exact_stack_number(graph(g.vertex_count(), edges)).k, exact_stack_number(g).k);
  }
}

TEST(LayoutFromDecomposition, Examples) {
  const auto t = random_tree(30, 2);
  const auto tree_td = exact_treewidth(t, 30).witness;
  const auto lt = layout_from_decomposition(t, tree_td);
  EXPECT_TRUE(check_stack_layout(t, lt).valid);
  EXPECT_EQ(lt.k, 1);

  const auto c6 = cycle_graph(6);
  const tree_decomposition path_td{{{0, 1, 5}, {1, 4, 5}, {1, 2, 4}, {2, 3, 4}}, {{0, 1}, {1, 2}, {2, 3}}};
  ASSERT_TRUE(check_tree_decomposition(c6, path_td).valid);
  const auto lc = layout_from_decomposition(c6, path_td);
  EXPECT_TRUE(check_stack_layout(c6, lc).valid);
  EXPECT_LE(lc.k, 2);

  const auto k4 = complete_graph(4);
  const auto lk = layout_from_decomposition(k4, tree_decomposition{{{0, 1, 2, 3}}, {}});
  EXPECT_TRUE(check_stack_layout(k4, lk).valid);
  EXPECT_EQ(lk.k, 2);

  EXPECT_THROW(layout_from_decomposition(c6, tree_decomposition{{{0, 1}}, {}}), precondition_error);
}

TEST(LayoutFromDecomposition, ValidAndNotBelowOptimum) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const auto g = oracle::random_small_graph(rng, 8, 20);
    const auto td = build_tree_decomposition(g, growth_constant(g));
    const auto layout = layout_from_decomposition(g, td);
    EXPECT_TRUE(check_stack_layout(g, layout).valid);
    EXPECT_GE(layout.k, exact_stack_number(g).k);
  }
}
