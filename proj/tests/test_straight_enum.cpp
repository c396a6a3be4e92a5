#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace robinsonian;
using namespace testing_support;

namespace {

Graph make(int n, std::vector<std::pair<Vertex, Vertex>> e) { return Graph(n, e); }

std::optional<WeakLinearOrder> enumerate(const Graph& g) {
  return straight_enumeration(g, lex_bfs(g, 0));
}

}  // namespace

TEST(StraightEnumeration, Path) {
  auto g = make(4, {{0, 1}, {1, 2}, {2, 3}});
  auto phi = enumerate(g);
  ASSERT_TRUE(phi);
  EXPECT_TRUE(same_up_to_reversal(*phi, WeakLinearOrder::linear({0, 1, 2, 3})));
  EXPECT_TRUE(verify_straight_enumeration(g, *phi));
}

TEST(StraightEnumeration, TwinsShareABlock) {
  // Six-vertex graph: 2,3,4 are universal; 5,6 are twins.
  auto a = six_vertex_matrix();
  auto g = support_graph(a);
  auto phi = enumerate(g);
  ASSERT_TRUE(phi);
  EXPECT_TRUE(same_up_to_reversal(*phi, WeakLinearOrder::from_blocks({{0}, {1, 2, 3}, {4, 5}})));
}

TEST(StraightEnumeration, RejectsClawAndCycle) {
  EXPECT_FALSE(enumerate(make(4, {{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_FALSE(enumerate(make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
}

TEST(StraightEnumeration, CompleteGraphIsOneBlock) {
  auto g = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto phi = enumerate(g);
  ASSERT_TRUE(phi);
  EXPECT_EQ(phi->block_count(), 1u);
}

TEST(StraightEnumeration, SingleVertexAndDisconnected) {
  auto one = make(1, {});
  auto phi = enumerate(one);
  ASSERT_TRUE(phi);
  EXPECT_EQ(phi->block_count(), 1u);
  auto two = make(2, {});
  std::vector<Vertex> sigma{0, 1};
  try {
    straight_enumeration(two, sigma);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_connected);
  }
}

TEST(StraightEnumeration, BlocksOf) {
  auto g = make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(blocks_of(g), (std::vector<std::vector<Vertex>>{{0, 1}, {2}, {3}, {4}}));
}

TEST(StraightEnumeration, IndependentOfStartOrder) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto a = planted_robinsonian(n, 1, 0.5, 1.2, rng);
    auto g = support_graph(a);
    if (!detail::is_connected(g)) continue;
    for (int k = 0; k < 3; ++k) {
      auto start = static_cast<Vertex>(rng() % n);
      auto phi = straight_enumeration(g, lex_bfs(g, start));
      ASSERT_TRUE(phi);
      EXPECT_TRUE(verify_straight_enumeration(g, *phi));
    }
  }
}
