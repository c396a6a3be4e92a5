#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace robinsonian;
using namespace testing_support;

TEST(Oracle, RobinsonDefinition) {
  SimilarityMatrix path(3, {{0, 1, Weight{1}}, {1, 2, Weight{1}}});
  EXPECT_TRUE(is_robinson(path));
  std::vector<Vertex> swapped{1, 0, 2};
  EXPECT_FALSE(is_robinson(path, swapped));
  std::vector<Vertex> bad{0, 0, 1};
  EXPECT_THROW(is_robinson(path, bad), Error);
}

TEST(Oracle, WorkedExampleOrder) {
  auto a = worked_example_matrix();
  auto pi = ids_from_labels(a, {1, 3, 14, 13, 11, 8, 7, 19, 5, 9, 17, 2, 4, 15, 18, 12, 6, 10, 16});
  EXPECT_TRUE(is_robinson(a, pi));
  std::swap(pi[0], pi[5]);
  EXPECT_FALSE(is_robinson(a, pi));
}

TEST(Oracle, BruteForceExamples) {
  auto one = brute_force(SimilarityMatrix(1, {}));
  EXPECT_EQ(one, (PermutationSet{{0}}));
  EXPECT_EQ(brute_force(six_vertex_matrix()).size(), 24u);
  EXPECT_TRUE(brute_force(claw_matrix()).empty());
  try {
    brute_force(SimilarityMatrix(9, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
  }
  EXPECT_EQ(brute_force(SimilarityMatrix(4, {}), 4).size(), 24u);
}

TEST(Oracle, UnitIntervalExamples) {
  std::vector<std::pair<Vertex, Vertex>> p4{{0, 1}, {1, 2}, {2, 3}};
  std::vector<std::pair<Vertex, Vertex>> claw{{0, 1}, {0, 2}, {0, 3}};
  std::vector<std::pair<Vertex, Vertex>> c4{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  EXPECT_TRUE(is_unit_interval_bf(Graph(4, p4)));
  EXPECT_FALSE(is_unit_interval_bf(Graph(4, claw)));
  EXPECT_FALSE(is_unit_interval_bf(Graph(4, c4)));
  EXPECT_THROW(is_unit_interval_bf(Graph(9, {})), Error);
}

TEST(Oracle, InvariantUnderShiftAndReversal) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto a = random_small_matrix(n, 3, rng);
    auto pi = random_permutation(n, rng);
    std::vector<Vertex> back(pi.rbegin(), pi.rend());
    bool r = is_robinson(a, pi);
    EXPECT_EQ(is_robinson(add_constant(a, 2), pi), r);
    EXPECT_EQ(is_robinson(a, back), r);
  }
}

TEST(Oracle, BinaryRobinsonianIffUnitInterval) {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      ASSERT_EQ(!brute_force(binary_matrix(g)).empty(), is_unit_interval_bf(g)) << n << " " << mask;
    }
  }
}

TEST(Oracle, StraightEnumerationVerifier) {
  std::vector<std::pair<Vertex, Vertex>> p3{{0, 1}, {1, 2}};
  Graph g(3, p3);
  EXPECT_TRUE(verify_straight_enumeration(g, WeakLinearOrder::linear({0, 1, 2})));
  EXPECT_FALSE(verify_straight_enumeration(g, WeakLinearOrder::linear({1, 0, 2})));
  EXPECT_FALSE(verify_straight_enumeration(g, WeakLinearOrder::from_blocks({{0, 1}, {2}})));
  EXPECT_FALSE(verify_straight_enumeration(g, WeakLinearOrder::linear({0, 1})));
}

TEST(Oracle, ComponentOrders) {
  std::vector<std::pair<Vertex, Vertex>> e{{0, 2}};
  Graph g(3, e);
  EXPECT_EQ(connected_components(g), (std::vector<std::vector<Vertex>>{{0, 2}, {1}}));
  EXPECT_FALSE(component_order_exists_bf(g, WeakLinearOrder::from_blocks({{0}, {1}, {2}})));
  EXPECT_TRUE(component_order_exists_bf(g, WeakLinearOrder::from_blocks({{1}, {0}, {2}})));
}
