#include <gtest/gtest.h>

#include "lingrowth/generators.hpp"

using namespace lingrowth;

TEST(Generate, Examples) {
  const auto g2 = grid_graph(2);
  EXPECT_EQ(g2.vertex_count(), 4);
  EXPECT_EQ(g2.edge_count(), 4u);
  for (vertex v = 0; v < 4; ++v) EXPECT_EQ(g2.degree(v), 2);
  const auto g3 = grid_graph(3);
  EXPECT_EQ(g3.vertex_count(), 9);
  EXPECT_EQ(g3.edge_count(), 12u);
  const auto p1 = path_graph(1);
  EXPECT_EQ(p1.vertex_count(), 1);
  EXPECT_EQ(p1.edge_count(), 0u);
  EXPECT_EQ(generate(family::complete_binary_tree, 7).edge_count(), 6u);
  EXPECT_EQ(star_graph(6).max_degree(), 5);
  EXPECT_THROW(generate(family::cycle, 2), range_error);
  EXPECT_THROW(generate(family::path, 0), range_error);
}

TEST(Generate, GridEdgeCountFormula) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(grid_graph(n).edge_count(), static_cast<std::size_t>(2 * n * (n - 1)));
}

TEST(StrongProduct, Examples) {
  EXPECT_EQ(strong_product(path_graph(2), path_graph(2)), complete_graph(4));
  const auto c5 = cycle_graph(5);
  EXPECT_EQ(strong_product(c5, path_graph(1)), c5);
  const auto p33 = strong_product(path_graph(3), path_graph(3));
  EXPECT_EQ(p33.vertex_count(), 9);
  EXPECT_EQ(p33.degree(4), 8);
}

// Edge count of G ⊠ H is |V(G)||E(H)| + |E(G)||V(H)| + 2|E(G)||E(H)|.
TEST(StrongProduct, EdgeCountFormula) {
  const graph gs[] = {path_graph(3), cycle_graph(4), complete_graph(3), grid_graph(2), star_graph(4)};
  for (const auto& g : gs)
    for (const auto& h : gs) {
      const auto nG = g.vertex_count(), nH = h.vertex_count();
      const auto mG = g.edge_count(), mH = h.edge_count();
      EXPECT_EQ(strong_product(g, h).edge_count(), nG * mH + mG * nH + 2 * mG * mH);
    }
}

TEST(BlowUp, Examples) {
  EXPECT_EQ(blow_up(path_graph(2), 2), complete_graph(4));
  EXPECT_EQ(blow_up(cycle_graph(5), 1), cycle_graph(5));
  const auto b = blow_up(path_graph(3), 2);
  EXPECT_EQ(b.vertex_count(), 6);
  // three K_2 copies plus two K_{2,2}
  EXPECT_EQ(b.edge_count(), 3u + 2u * 4u);
}

TEST(RandomCubic, SmallestIsK4) {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) EXPECT_EQ(random_cubic(4, seed), complete_graph(4));
}

TEST(RandomCubic, DeterministicAndCubic) {
  for (int n : {6, 10, 50}) {
    const auto g = random_cubic(n, 5);
    EXPECT_EQ(g, random_cubic(n, 5));
    for (vertex v = 0; v < n; ++v) EXPECT_EQ(g.degree(v), 3);
  }
  EXPECT_THROW(random_cubic(7, 1), range_error);
  EXPECT_THROW(random_cubic(2, 1), range_error);
}

TEST(RandomTree, IsTreeAndDeterministic) {
  for (int n : {1, 2, 3, 10, 200}) {
    const auto t = random_tree(n, 3);
    EXPECT_TRUE(n == 1 || is_tree(t));
    EXPECT_EQ(t, random_tree(n, 3));
  }
}

TEST(PathProduct, MatchesRepeatedProduct) {
  EXPECT_EQ(path_product(3, 2), strong_product(path_graph(3), path_graph(3)));
  EXPECT_EQ(path_product(5, 3).vertex_count(), 125);
}
