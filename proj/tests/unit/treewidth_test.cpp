#include <gtest/gtest.h>

#include <random>

#include "lingrowth/generators.hpp"
#include "lingrowth/treewidth.hpp"
#include "oracles.hpp"

using namespace lingrowth;

namespace {

void expect_width(const graph& g, int width) {
  const auto r = exact_treewidth(g);
  EXPECT_EQ(r.width, width);
  const auto rep = check_tree_decomposition(g, r.witness);
  EXPECT_TRUE(rep.valid) << rep.first_failure;
  EXPECT_EQ(rep.width, width);
}

}  // namespace

TEST(ExactTreewidth, Grids) {
  for (int n : {2, 3, 4}) expect_width(grid_graph(n), n);
}

TEST(ExactTreewidth, Trees) {
  expect_width(path_graph(10), 1);
  expect_width(star_graph(9), 1);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) expect_width(random_tree(16, seed), 1);
}

TEST(ExactTreewidth, CompleteGraphsAndCycles) {
  for (int n = 1; n <= 8; ++n) expect_width(complete_graph(n), n - 1);
  expect_width(complete_graph(6), 5);
  expect_width(cycle_graph(5), 2);
  expect_width(graph(3), 0);
}

TEST(ExactTreewidth, AgreesWithPermutationOracle) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 80; ++t) {
    const auto g = oracle::random_small_graph(rng, 8, 20);
    const auto r = exact_treewidth(g);
    EXPECT_EQ(r.width, oracle::treewidth_by_permutations(g)) << serialize_edge_list(g);
    EXPECT_TRUE(check_tree_decomposition(g, r.witness).valid);
  }
}

TEST(ExactTreewidth, AgreesWithSubsetRecurrence) {
  std::mt19937_64 rng(81);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<int> size(9, 13);
    const int n = size(rng);
    std::vector<edge> edges;
    const double density = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (std::bernoulli_distribution(density)(rng)) edges.emplace_back(u, v);
    const graph g(n, edges);
    const auto r = exact_treewidth(g);
    EXPECT_EQ(r.width, oracle::treewidth_by_subsets(g)) << serialize_edge_list(g);
    EXPECT_TRUE(check_tree_decomposition(g, r.witness).valid);
  }
  for (int n : {6, 8}) EXPECT_EQ(exact_treewidth(complete_graph(n)).width, oracle::treewidth_by_subsets(complete_graph(n)));
  EXPECT_EQ(oracle::treewidth_by_subsets(grid_graph(3)), 3);
}

TEST(ExactTreewidth, SizeBudget) {
  EXPECT_THROW(exact_treewidth(path_graph(19)), capacity_error);
  EXPECT_EQ(exact_treewidth(path_graph(30), 30).width, 1);
}
