#include <gtest/gtest.h>

#include <random>

#include "famalg/lie.hpp"

using namespace famalg;

namespace {

RationalMatrix mat_mul(const RationalMatrix &a, const RationalMatrix &b) {
  RationalMatrix c{a.rows(), b.cols()};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero())
        for (std::size_t j = 0; j < b.cols(); ++j)
          c(i, j) += a(i, k) * b(k, j);
  return c;
}

} // namespace

TEST(Lie, Sl2BasisAndForm) {
  const LieData lie = LieData::build(2);
  ASSERT_EQ(lie.dim(), 3);
  EXPECT_EQ(lie.basis()[0].name(), "E12");
  EXPECT_EQ(lie.basis()[1].name(), "E21");
  EXPECT_EQ(lie.basis()[2].name(), "H1");
  // tr(E12 E21) = 1, tr(H H) = 2
  EXPECT_EQ(lie.killing()(0, 1), Rational(1));
  EXPECT_EQ(lie.killing()(2, 2), Rational(2));
  EXPECT_TRUE(lie.killing()(0, 0).is_zero());
  // [H, E12] = 2 E12, [E12, E21] = H
  EXPECT_EQ(lie.structure_constant(2, 0, 0), Rational(2));
  EXPECT_EQ(lie.structure_constant(0, 1, 2), Rational(1));
}

TEST(Lie, DimensionsAndOrder) {
  for (int n = 2; n <= 5; ++n) {
    const LieData lie = LieData::build(n);
    EXPECT_EQ(lie.dim(), n * n - 1);
    EXPECT_EQ(lie.index_of_offdiagonal(1, 2), 0);
    EXPECT_EQ(lie.basis()[std::size_t(lie.index_of_offdiagonal(n, n - 1))].name(),
              "E" + std::to_string(n) + std::to_string(n - 1));
  }
  EXPECT_THROW(LieData::build(1), std::exception);
}

TEST(Lie, InverseForm) {
  for (int n = 2; n <= 4; ++n) {
    const LieData lie = LieData::build(n);
    const auto prod = mat_mul(lie.killing(), lie.killing_inverse());
    for (int a = 0; a < lie.dim(); ++a)
      for (int b = 0; b < lie.dim(); ++b)
        EXPECT_EQ(prod(std::size_t(a), std::size_t(b)), Rational(a == b ? 1 : 0));
  }
}

TEST(Lie, ProjectorIdentity) {
  for (int n = 2; n <= 5; ++n)
    EXPECT_TRUE(projector_identity_check(LieData::build(n))) << "n=" << n;
}

TEST(Lie, ProjectorIdentityDetectsPerturbedForm) {
  const LieData lie = LieData::build(3);
  RationalMatrix bad = lie.killing_inverse();
  bad(0, 1) += Rational(1, 5);
  EXPECT_FALSE(projector_identity_check(lie, bad));
}

TEST(Lie, ExpAdOfNilpotent) {
  const LieData lie = LieData::build(2);
  const GroupElement g = exp_ad_nilpotent(lie, 1, 2, Rational(1));
  // exp(E12) = [[1,1],[0,1]]
  EXPECT_EQ(g.defining(0, 0), Rational(1));
  EXPECT_EQ(g.defining(0, 1), Rational(1));
  EXPECT_EQ(g.defining(1, 0), Rational(0));
  // Ad acts on E21: E21 + H - E12
  EXPECT_EQ(g.adjoint(1, 1), Rational(1));
  EXPECT_EQ(g.adjoint(2, 1), Rational(1));
  EXPECT_EQ(g.adjoint(0, 1), Rational(-1));
}

TEST(Lie, AdjointPreservesForm) {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 4; ++n) {
    const LieData lie = LieData::build(n);
    for (int trial = 0; trial < 3; ++trial) {
      const GroupElement g = random_group_element(lie, rng);
      EXPECT_EQ(mat_mul(mat_mul(transpose(g.adjoint), lie.killing()), g.adjoint), lie.killing());
    }
  }
}

TEST(Lie, ComposeIsAHomomorphism) {
  const LieData lie = LieData::build(3);
  const GroupElement a = exp_ad_nilpotent(lie, 1, 3, Rational(2));
  const GroupElement b = exp_ad_nilpotent(lie, 3, 2, Rational(-1, 2));
  const GroupElement ab = compose(a, b);
  EXPECT_EQ(ab.adjoint, mat_mul(a.adjoint, b.adjoint));
  EXPECT_EQ(ab.defining, mat_mul(a.defining, b.defining));
}

TEST(Lie, RandomPointRespectsBound) {
  std::mt19937_64 rng(1);
  const LieData lie = LieData::build(4);
  const auto p = random_point(lie, rng, 3);
  ASSERT_EQ(int(p.size()), lie.dim());
  for (const auto &x : p) {
    EXPECT_TRUE(x.is_integer());
    EXPECT_LE(x, Rational(3));
    EXPECT_GE(x, Rational(-3));
  }
}
