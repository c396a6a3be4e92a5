#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace robinsonian;
using namespace testing_support;

TEST(MatrixIo, DenseWithCommentsAndCommas) {
  auto a = parse_matrix("# path\n0, 2, 0\n2, 0, 1  # row 2\n0 1 0\n");
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.edge_count(), 2u);
  EXPECT_EQ(a.at(0, 1).ticks, 2);
  EXPECT_EQ(a.at(0, 2).ticks, 0);
}

TEST(MatrixIo, DiagonalIsIgnored) {
  auto a = parse_matrix("5 1\n1 7\n");
  EXPECT_EQ(a.edge_count(), 1u);
  EXPECT_EQ(a.at(0, 0).ticks, 0);
}

TEST(MatrixIo, SparseForm) {
  auto a = parse_matrix("4 2\n1 2 3\n4 3 1\n");
  EXPECT_EQ(a.size(), 4);
  EXPECT_EQ(a.at(2, 3).ticks, 1);
  EXPECT_THROW(parse_matrix("3 2\n1 2 1\n"), Error);
  EXPECT_THROW(parse_matrix("3 2\n1 2 1\n2 1 4\n"), Error);
  EXPECT_THROW(parse_matrix("3 1\n1 1 1\n"), Error);
  EXPECT_THROW(parse_matrix("3 1\n1 4 1\n"), Error);
}

TEST(MatrixIo, DecimalsShareOneScale) {
  auto a = parse_matrix("0 0.5 1.25\n0.5 0 2\n1.25 2 0\n");
  EXPECT_EQ(a.at(0, 1).ticks, 50);
  EXPECT_EQ(a.at(0, 2).ticks, 125);
  EXPECT_EQ(a.at(1, 2).ticks, 200);
}

TEST(MatrixIo, QuantizeRoundsToSteps) {
  LoadOptions o;
  o.quantize = 0.1;
  auto a = parse_matrix("0 0.333 1e-1\n0.333 0 0.04\n0.1 0.04 0\n", o);
  EXPECT_EQ(a.at(0, 1).ticks, 3);
  EXPECT_EQ(a.at(0, 2).ticks, 1);
  EXPECT_EQ(a.at(1, 2).ticks, 0);
  EXPECT_THROW(parse_matrix("0 1e-1\n1e-1 0\n"), Error);
}

TEST(MatrixIo, MalformedInputNamesTheLine) {
  try {
    parse_matrix("0 1 2\n1 0\n2 1 0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::malformed_input);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_matrix(""), Error);
  EXPECT_THROW(parse_matrix("0 x\nx 0\n"), Error);
}

TEST(MatrixIo, AsymmetryIsRejected) {
  try {
    parse_matrix("0 1\n2 0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::asymmetric_input);
  }
}

TEST(MatrixIo, NegativeNeedsShift) {
  try {
    parse_matrix("0 -1 2\n-1 0 3\n2 3 0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::negative_entry);
  }
  auto a = parse_matrix("0 -1 2\n-1 0 3\n2 3 0\n", {.shift = true});
  EXPECT_EQ(a.at(0, 1).ticks, 0);
  EXPECT_EQ(a.at(0, 2).ticks, 3);
  EXPECT_EQ(a.at(1, 2).ticks, 4);
}

TEST(MatrixIo, DissimilarityOfWorkedExampleGivesSimilarity) {
  auto from_d = worked_example_matrix();
  auto direct = load_matrix_file(data_path("worked_example_similarity.txt"));
  EXPECT_EQ(from_d, direct);
  EXPECT_EQ(from_d.size(), 19);
  EXPECT_EQ(from_d.at(0, 2).ticks, 9);
}

TEST(MatrixIo, SparseDissimilarityCountsAbsentPairs) {
  // Absent pairs are dissimilarity 0, so they become the largest similarity.
  auto a = parse_matrix("3 1\n1 2 4\n", {.dissimilarity = true});
  EXPECT_EQ(a.at(0, 1).ticks, 0);
  EXPECT_EQ(a.at(0, 2).ticks, 4);
  EXPECT_EQ(a.at(1, 2).ticks, 4);
}

TEST(MatrixIo, FormatSparseRoundTrips) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_matrix(7, 9, 0.5, rng);
    EXPECT_EQ(parse_matrix(format_sparse(a)), a);
  }
}

TEST(MatrixIo, MissingFile) { EXPECT_THROW(load_matrix_file("/nonexistent/matrix.txt"), Error); }
