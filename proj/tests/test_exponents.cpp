#include <gtest/gtest.h>

#include "famalg/errors.hpp"
#include "famalg/exponents.hpp"

using namespace famalg;

TEST(Weights, AdjointMultiplicities) {
  for (int n = 2; n <= 6; ++n) {
    const auto w = weight_multiplicities(n);
    EXPECT_EQ(int(w.size()), n * (n - 1) + 1);
    EXPECT_EQ(w.at(std::vector<int>(std::size_t(n), 0)), n - 1);
    EXPECT_EQ(family_dimension(n), 2 * n * n - 3 * n + 1);
  }
}

TEST(Weights, Labels) {
  EXPECT_EQ((DominantWeight{{1, 0, 1}}).label(), "w1+w3");
  EXPECT_EQ((DominantWeight{{0, 2, 0}}).label(), "2w2");
  EXPECT_EQ((DominantWeight{{0, 0, 0}}).label(), "0");
}

TEST(Weights, ToPartition) {
  const auto [lambda, mu] = weight_to_partition(DominantWeight{{1, 0, 1}}, 4);
  EXPECT_EQ(lambda, (Partition{2, 1, 1}));
  EXPECT_EQ(mu, (Partition{1, 1, 1, 1}));
  const auto [l0, m0] = weight_to_partition(DominantWeight{{0, 0, 0}}, 4);
  EXPECT_TRUE(l0.empty());
  EXPECT_TRUE(m0.empty());
  EXPECT_THROW(weight_to_partition(DominantWeight{{1, 0, 0}}, 4), std::invalid_argument);
  EXPECT_THROW(weight_to_partition(DominantWeight{{1, 0}}, 4), std::invalid_argument);
}

TEST(Tableaux, Counts) {
  EXPECT_EQ(semistandard_tableaux({2, 1}, {1, 1, 1}).size(), 2u);
  EXPECT_EQ(semistandard_tableaux({4, 2, 2}, {2, 2, 2, 2}).size(), 6u);
  EXPECT_EQ(semistandard_tableaux({3, 3}, {2, 2, 2}).size(), 1u);
  EXPECT_TRUE(semistandard_tableaux({1, 1}, {2}).empty());
}

TEST(Charge, Words) {
  EXPECT_EQ(charge({2, 1}), 0);
  EXPECT_EQ(charge({1, 2}), 1);
  EXPECT_EQ(charge({1, 2, 3}), 3);
  EXPECT_EQ(charge({3, 2, 1}), 0);
  EXPECT_THROW(charge({2, 2}), std::invalid_argument);
}

TEST(Kostka, SmallCases) {
  EXPECT_EQ(kostka({1, 1}, {1, 1}).to_string(), "1");
  EXPECT_EQ(kostka({2}, {1, 1}).to_string(), "q");
  EXPECT_EQ(kostka({2, 1}, {1, 1, 1}).to_string(), "q+q^2");
  EXPECT_EQ(kostka({3}, {1, 1, 1}).to_string(), "q^3");
  EXPECT_EQ(kostka({2, 2}, {2, 1, 1}).to_string(), "q");
  EXPECT_EQ(kostka({3, 1}, {2, 1, 1}).to_string(), "q+q^2");
  EXPECT_EQ(kostka({2, 2}, {1, 1, 1, 1}).to_string(), "q^2+q^4");
}

TEST(ExponentTable, N4) {
  const auto report = verify_exponent_table(4);
  ASSERT_EQ(report.rows.size(), 6u);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.rows[1].row.label, "w1+w3");
  EXPECT_EQ(report.rows[1].computed.to_string(), "q+q^2+q^3");
  EXPECT_EQ(report.rows[4].computed.to_string(), "q^2+q^4");
  EXPECT_EQ(report.rows[5].computed.to_string(), "q^2+q^3+2q^4+q^5+q^6");
  EXPECT_EQ(report.total_at_one, 21);
}

TEST(ExponentTable, N5AndN6) {
  EXPECT_TRUE(verify_exponent_table(5).ok());
  const auto r6 = verify_exponent_table(6);
  EXPECT_TRUE(r6.ok());
  EXPECT_EQ(r6.total_at_one, 55);
}

TEST(ExponentTable, SmallNUnsupported) {
  EXPECT_THROW(exponent_table(3), UnsupportedRegime);
}
