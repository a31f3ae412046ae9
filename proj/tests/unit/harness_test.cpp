#include <gtest/gtest.h>

#include "lingrowth/harness.hpp"

using namespace lingrowth;

namespace {

std::vector<corpus_entry> small_corpus() {
  return {{"path(12)", path_graph(12), {}},
          {"cycle(9)", cycle_graph(9), {}},
          {"grid(3)", grid_graph(3), 3},
          {"random_tree(9)", random_tree(9, 1), {}},
          {"random_cubic(10)", random_cubic(10, 1), {}},
          {"P3^2", path_product(3, 2), {}}};
}

}  // namespace

TEST(Harness, TreewidthBound) {
  EXPECT_EQ(treewidth_bound(1), big_int(79));
  EXPECT_EQ(treewidth_bound(rational(3, 2)), big_int(155));  // 110.25 + 45
}

TEST(Harness, SmallCorpusPassesEverySuite) {
  const auto reports = run_theorem_suite(small_corpus(), suite::all);
  std::set<std::string> seen;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.pass) << r.to_json().dump();
    seen.insert(r.theorem);
  }
  for (const char* t : {"L2.2", "L2.3", "L2.4", "T1.1", "T1.2", "T3.1", "C3.3", "T4.2", "T5.4", "L5.1", "T5.2", "C5.3"})
    EXPECT_TRUE(seen.count(t)) << t;
}

TEST(Harness, SuiteSelection) {
  for (const auto& r : run_theorem_suite(small_corpus(), parse_suite("t3.1")))
    EXPECT_TRUE(r.theorem == "T3.1" || r.theorem == "C3.3");
  EXPECT_THROW(parse_suite("t9"), parse_error);
}

TEST(Harness, ExplorationRows) {
  const auto rows = lower_bound_exploration({10, 12}, {1, 2});
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) {
    EXPECT_GE(row.treewidth, 2);
    EXPECT_LE(row.growth_constant, row.cubic_ball_ceiling);
  }
  EXPECT_THROW(lower_bound_exploration({20}, {1}), capacity_error);
}
