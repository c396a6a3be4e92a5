#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

using namespace robinsonian;
using namespace testing_support;

namespace {

PQTree L(int x) { return PQTree::leaf(x); }

PQTree worked_example_tree() {
  return PQTree::p({PQTree::q({L(1), L(3), L(14), L(13), L(11), L(8), L(7), L(19), L(5),
                               PQTree::p({L(9), L(17)}), L(2)}),
                    PQTree::q({L(4), L(15), L(18), L(12), L(6), L(10), L(16)})});
}

PQTree mirror(const PQTree& t) {
  if (t.is_leaf()) return t;
  std::vector<PQTree> kids;
  for (const auto& c : t.children()) kids.push_back(mirror(c));
  std::reverse(kids.begin(), kids.end());
  return t.kind() == PQTree::Kind::p ? PQTree::p(std::move(kids)) : PQTree::q(std::move(kids));
}

PQTree random_tree(std::mt19937_64& rng, int& next_label, int depth) {
  if (depth == 0 || rng() % 3 == 0) return L(next_label++);
  int k = 2 + static_cast<int>(rng() % 3);
  std::vector<PQTree> kids;
  for (int i = 0; i < k; ++i) kids.push_back(random_tree(rng, next_label, depth - 1));
  return rng() % 2 ? PQTree::p(std::move(kids)) : PQTree::q(std::move(kids));
}

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(PQTree, SixVertexGraph) {
  auto t = robinsonian_pq(six_vertex_matrix());
  ASSERT_TRUE(t);
  EXPECT_EQ(serialize(*t, Format::bracket), "Q[1,P(2,3,4),P(5,6)]");
  EXPECT_EQ(count_orders(*t), 24);
  auto orders = frontier_ids(*t);
  EXPECT_EQ(orders, brute_force(six_vertex_matrix()));
}

TEST(PQTree, WorkedExampleTree) {
  auto a = worked_example_matrix();
  auto t = robinsonian_pq(a);
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, canonicalize(worked_example_tree()));
  EXPECT_EQ(count_orders(*t), 16);
  auto orders = frontier(*t);
  EXPECT_EQ(orders.size(), 16u);
  for (const auto& o : orders) {
    std::vector<Vertex> pi;
    for (int label : o) pi.push_back(label - 1);
    EXPECT_TRUE(is_robinson(a, pi));
  }
}

TEST(PQTree, TrivialShapes) {
  auto edgeless = robinsonian_pq(SimilarityMatrix(4, {}));
  ASSERT_TRUE(edgeless);
  EXPECT_EQ(serialize(*edgeless, Format::bracket), "P(1,2,3,4)");
  auto single = robinsonian_pq(SimilarityMatrix(1, {}));
  ASSERT_TRUE(single);
  EXPECT_EQ(serialize(*single, Format::bracket), "1");
  auto path = robinsonian_pq(SimilarityMatrix(4, {{0, 1, Weight{1}}, {1, 2, Weight{1}}, {2, 3, Weight{1}}}));
  ASSERT_TRUE(path);
  EXPECT_EQ(serialize(*path, Format::bracket), "Q[1,2,3,4]");
  auto claw = robinsonian_pq(claw_matrix());
  ASSERT_FALSE(claw);
  EXPECT_EQ(claw.rejection().stage, Stage::straight_enumeration);
}

TEST(PQTree, CanonicalForm) {
  EXPECT_EQ(canonicalize(PQTree::q({L(3), L(2), L(1)})), PQTree::q({L(1), L(2), L(3)}));
  EXPECT_EQ(canonicalize(PQTree::q({L(2), L(1)})), PQTree::p({L(1), L(2)}));
  EXPECT_EQ(canonicalize(PQTree::p({PQTree::q({L(4)}), L(1)})), PQTree::p({L(1), L(4)}));
  EXPECT_EQ(canonicalize(worked_example_tree()), canonicalize(mirror(worked_example_tree())));
}

TEST(PQTree, CanonicalizeIsIdempotentAndKeepsFrontier) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    int next = 1;
    auto t = random_tree(rng, next, 3);
    auto c = canonicalize(t);
    EXPECT_EQ(canonicalize(c), c);
    EXPECT_EQ(canonicalize(mirror(t)), c);
    if (count_orders(t) <= 5000) {
      EXPECT_EQ(as_set(frontier(t)), as_set(frontier(c)));
    }
  }
}

TEST(PQTree, FrontierCountsMatch) {
  EXPECT_EQ(count_orders(L(7)), 1);
  EXPECT_EQ(frontier(PQTree::q({L(1), L(2), L(3)})),
            (std::vector<std::vector<int>>{{1, 2, 3}, {3, 2, 1}}));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    int next = 1;
    auto t = random_tree(rng, next, 3);
    if (count_orders(t) > 10000) continue;
    auto orders = frontier(t);
    EXPECT_EQ(count_orders(t), orders.size());
    EXPECT_EQ(as_set(orders).size(), orders.size());
  }
}

TEST(PQTree, CountsBeyondMachineWords) {
  std::vector<PQTree> leaves;
  for (int i = 1; i <= 30; ++i) leaves.push_back(L(i));
  auto big = count_orders(PQTree::p(leaves));
  boost::multiprecision::cpp_int expect = 1;
  for (int i = 2; i <= 30; ++i) expect *= i;
  EXPECT_EQ(big, expect);
}

TEST(PQTree, FrontierStreamIsLazy) {
  std::vector<PQTree> leaves;
  for (int i = 1; i <= 20; ++i) leaves.push_back(L(i));
  FrontierStream stream(PQTree::p(leaves));
  for (int i = 0; i < 5; ++i) ASSERT_TRUE(stream.next());
}

TEST(PQTree, SerializationRoundTrips) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    int next = 1;
    auto t = random_tree(rng, next, 4);
    EXPECT_EQ(parse_bracket(serialize(t, Format::bracket)), t);
    EXPECT_EQ(parse_json(serialize(t, Format::json)), t);
    EXPECT_EQ(parse(serialize(t, Format::json), Format::json), t);
  }
  EXPECT_EQ(serialize(L(7), Format::bracket), "7");
  EXPECT_EQ(serialize(PQTree::p({L(1), L(2)}), Format::json),
            R"({"children":[{"label":1,"type":"leaf"},{"label":2,"type":"leaf"}],"type":"P"})");
  auto dot = serialize(worked_example_tree(), Format::dot);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 22);
}

TEST(PQTree, ParserErrors) {
  EXPECT_THROW(parse_bracket("Q[1,2"), Error);
  EXPECT_THROW(parse_bracket("P(1,2]"), Error);
  EXPECT_THROW(parse_bracket("Q[1,,2]"), Error);
  EXPECT_THROW(parse_bracket("1 2"), Error);
  EXPECT_THROW(parse_json("{\"type\":\"X\"}"), Error);
  EXPECT_THROW(parse_json("not json"), Error);
  EXPECT_EQ(parse_bracket(" Q[ 1 , P( 2,3 ) ] "), PQTree::q({L(1), PQTree::p({L(2), L(3)})}));
  try {
    parse_format("xml");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_format);
  }
  EXPECT_THROW(parse("x", Format::dot), Error);
}

TEST(PQTree, AgreesWithOrderingAndContainsIt) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto a = trial % 2 ? random_small_matrix(n, 3, rng) : planted_robinsonian(n, 3, 0.5, 1.5, rng);
    auto t = robinsonian_pq(a);
    auto pi = robinsonian_order(a);
    ASSERT_EQ(t.ok(), pi.ok());
    if (!t) continue;
    auto orders = frontier_ids(*t);
    EXPECT_TRUE(std::binary_search(orders.begin(), orders.end(), *pi));
    EXPECT_EQ(orders, brute_force(a));
  }
}

TEST(PQTree, GivenPsiFrontierCoversCompatibleOrders) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto a = trial % 2 ? random_small_matrix(n, 3, rng) : planted_robinsonian(n, 3, 0.5, 1.5, rng);
    auto psi = random_weak_order(n, 1 + static_cast<int>(rng() % 3), rng);
    std::vector<std::vector<Vertex>> want;
    for (const auto& pi : brute_force(a))
      if (is_compatible(psi, pi)) want.push_back(pi);
    auto t = robinson_pq(a, psi);
    ASSERT_EQ(t.ok(), !want.empty());
    if (!t) continue;
    // Q-nodes may still be reversed, so the tree covers more than the compatible orders.
    auto orders = frontier_ids(*t);
    auto all = brute_force(a);
    for (const auto& pi : want) EXPECT_TRUE(std::binary_search(orders.begin(), orders.end(), pi));
    for (const auto& pi : orders) EXPECT_TRUE(std::binary_search(all.begin(), all.end(), pi));
  }
}
