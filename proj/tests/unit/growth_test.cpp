#include <gtest/gtest.h>

#include <random>

#include "lingrowth/generators.hpp"
#include "lingrowth/growth.hpp"
#include "oracles.hpp"

using namespace lingrowth;

TEST(GrowthProfile, Path9) {
  const auto p = compute_growth_profile(path_graph(9), 12);
  for (int r = 1; r <= 12; ++r) EXPECT_EQ(p.at(r), std::min(2 * r + 1, 9)) << r;
  EXPECT_EQ(p.growth_constant, rational(3));
  EXPECT_EQ(p.argmax_radius, 1);
}

TEST(GrowthProfile, ProductOfThreePaths) {
  const auto p = compute_growth_profile(path_product(5, 3), 2);
  EXPECT_EQ(p.at(1), 27);
  EXPECT_EQ(p.at(2), 125);
}

TEST(GrowthProfile, Complete5) {
  const auto p = compute_growth_profile(complete_graph(5), 5);
  EXPECT_EQ(p.at(1), 5);
  EXPECT_EQ(p.growth_constant, rational(5));
}

TEST(GrowthProfile, RadiusCappedAtVertexCount) {
  // the maximum over r in [1, min(r_max, n)] for a 2-vertex graph is 2/1
  EXPECT_EQ(growth_constant(path_graph(2)), rational(2));
  EXPECT_EQ(growth_constant(path_graph(1)), rational(1));
  EXPECT_THROW(compute_growth_profile(graph(), 1), domain_error);
  EXPECT_THROW(compute_growth_profile(path_graph(3), 0), domain_error);
}

TEST(BruteForceGrowth, Examples) {
  EXPECT_EQ(brute_force_growth(path_graph(3), 1), 3);
  EXPECT_EQ(brute_force_growth(cycle_graph(5), 1), 3);
  EXPECT_EQ(brute_force_growth(complete_graph(4), 1), 4);
  EXPECT_THROW(brute_force_growth(complete_graph(7), 1), capacity_error);
}

// Ball maxima, subgraph enumeration and Floyd-Warshall all agree.
TEST(BruteForceGrowth, AgreesWithBallsOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 60; ++t) {
    const auto g = oracle::random_small_graph(rng, 8, 14);
    const int n = g.vertex_count();
    const auto profile = compute_growth_profile(g, n);
    const auto brute = brute_force_growth_profile(g, n);
    for (int r = 1; r <= n; ++r) {
      EXPECT_EQ(profile.at(r), brute[static_cast<std::size_t>(r - 1)]) << serialize_edge_list(g) << " r=" << r;
      EXPECT_EQ(profile.at(r), oracle::max_ball(g, r));
    }
  }
}

TEST(GrowthProfile, Monotone) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto g = oracle::random_small_graph(rng, 15, 40);
    const auto p = compute_growth_profile(g, g.vertex_count() + 2);
    for (int r = 2; r <= p.r_max; ++r) EXPECT_LE(p.at(r - 1), p.at(r));
    rational best = 0;
    for (int r = 1; r <= std::min(p.r_max, g.vertex_count()); ++r) best = std::max(best, rational(p.at(r), r));
    EXPECT_EQ(p.growth_constant, best);
  }
}

TEST(VerifyGrowthBound, Examples) {
  EXPECT_TRUE(verify_growth_bound(path_graph(9), linear_bound(3)).holds);
  const auto k4 = verify_growth_bound(complete_graph(4), linear_bound(2));
  ASSERT_FALSE(k4.holds);
  EXPECT_EQ(k4.first_violation->r, 1);
  EXPECT_EQ(k4.first_violation->f, 4);
  const auto g = grid_graph(4);
  EXPECT_TRUE(verify_growth_bound(g, [&](std::int64_t) { return rational(g.vertex_count()); }).holds);
  EXPECT_THROW(verify_growth_bound(g, [](std::int64_t) -> rational { throw std::runtime_error("no"); }),
               domain_error);
}

TEST(PolynomialBound, ParseAndEvaluate) {
  const auto f = polynomial_bound::parse("1,3,1");
  EXPECT_EQ(f(10), rational(131));
  EXPECT_TRUE(f.nondecreasing_on(1, 50));
  EXPECT_EQ(polynomial_bound::parse("1/2,3/2")(3), rational(5));
  EXPECT_FALSE(polynomial_bound::parse("0,5,-1").nondecreasing_on(1, 10));
  EXPECT_THROW(polynomial_bound::parse("1,,2"), parse_error);
}
