#include <gtest/gtest.h>

#include "famalg/casimir.hpp"
#include "famalg/lie.hpp"

using namespace famalg;

TEST(Compositions, CountAndOrder) {
  for (int k = 1; k <= 8; ++k)
    EXPECT_EQ(compositions(k).size(), std::size_t(1) << (k - 1));
  const auto c3 = compositions(3);
  ASSERT_EQ(c3.size(), 4u);
  EXPECT_EQ(c3[0].parts, (std::vector<int>{3}));
  EXPECT_EQ(c3[1].parts, (std::vector<int>{1, 2}));
  EXPECT_EQ(c3[2].parts, (std::vector<int>{2, 1}));
  EXPECT_EQ(c3[3].parts, (std::vector<int>{1, 1, 1}));
  for (const auto &c : compositions(6, 3))
    EXPECT_GE(c.size(), 3u);
}

TEST(Casimir, Sl2) {
  const LieData lie = LieData::build(2);
  const Casimirs cas(lie);
  EXPECT_TRUE(cas.c(1).is_zero());
  EXPECT_EQ(cas.c(2).to_string(), "2*x1*x2 + 1/2*x3^2");
  EXPECT_TRUE(cas.c(3).is_zero());
  // F^2 = (c2/2) Id
  EXPECT_EQ(cas.c(4), cas.c(2) * cas.c(2) * Rational(1, 2));
}

TEST(Casimir, HomogeneousOfDegreeK) {
  const Casimirs cas(LieData::build(3));
  for (int k = 2; k <= 6; ++k) {
    EXPECT_TRUE(cas.c(k).is_homogeneous());
    EXPECT_EQ(cas.c(k).degree(), k);
  }
}

TEST(Casimir, CayleyHamiltonResidualVanishes) {
  for (int n = 2; n <= 4; ++n) {
    const LieData lie = LieData::build(n);
    const FMatrix F = build_F(lie);
    const auto d = coeffs_d(F);
    const PolyMatrix res = cayley_hamilton_residual(F, d);
    for (const auto &p : res.data())
      EXPECT_TRUE(p.is_zero()) << "n=" << n;
  }
}

TEST(Casimir, NewtonCoefficientsAtN4) {
  const Casimirs cas(LieData::build(4));
  const Poly &c2 = cas.c(2), &c3 = cas.c(3), &c4 = cas.c(4);
  EXPECT_EQ(cas.d(2), c2 * Rational(1, 2));
  EXPECT_EQ(cas.d(3), c3 * Rational(1, 3));
  EXPECT_EQ(cas.d(4), c4 * Rational(1, 4) - c2 * c2 * Rational(1, 8));
}

TEST(Casimir, QuinticReducesAtN4) {
  const Casimirs cas(LieData::build(4));
  EXPECT_EQ(cas.c(5), cas.c(2) * cas.c(3) * Rational(5, 6));
}

TEST(Casimir, SandwichScalars) {
  const Casimirs cas(LieData::build(3));
  EXPECT_EQ(sandwich_scalar(cas, 2), cas.c(2));
  EXPECT_EQ(sandwich_scalar(cas, 3), cas.c(3));
  EXPECT_EQ(sandwich_scalar(cas, 4), cas.c(4) - cas.c(2) * cas.c(2) * Rational(1, 3));
  EXPECT_EQ(cas.product({2, 3}), cas.c(2) * cas.c(3));
}
