#include <gtest/gtest.h>

#include <random>

#include "famalg/poly.hpp"
#include "famalg/qpoly.hpp"
#include "famalg/rational.hpp"

using namespace famalg;

namespace {

Poly random_poly(std::mt19937_64 &rng, int nvars, int terms, int max_deg) {
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int left = int(rng() % std::uint64_t(max_deg + 1));
    while (left > 0) {
      const int v = int(rng() % std::uint64_t(nvars));
      m.set_exponent(v, m.exponent(v) + 1);
      --left;
    }
    ts.push_back({m, Rational(std::int64_t(rng() % 19) - 9, std::int64_t(rng() % 5) + 1)});
  }
  return Poly::from_terms(nvars, std::move(ts));
}

} // namespace

TEST(Rational, NormalizesAndPrints) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(8, 4).to_string(), "2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, OverflowPromotesToBigValues) {
  Rational x(std::int64_t(1) << 62);
  const Rational y = x * x * x;
  EXPECT_FALSE(y.is_small());
  EXPECT_EQ(y / x / x, x);
  EXPECT_TRUE((y - y).is_zero());
  EXPECT_TRUE((y / y).is_one());
}

TEST(Rational, ModularImage) {
  const std::uint64_t p = 1000000007;
  EXPECT_EQ(Rational(1, 2).mod(p), (p + 1) / 2);
  EXPECT_EQ(Rational(-1).mod(p), p - 1);
}

TEST(Poly, CanonicalText) {
  const Poly x1 = Poly::variable(3, 0), x3 = Poly::variable(3, 2);
  const Poly p = x1 * x1 * x3 * Rational(5, 2) - Poly::variable(3, 1) + Poly::constant(3, 1);
  EXPECT_EQ(p.to_string(), "5/2*x1^2*x3 - x2 + 1");
  EXPECT_EQ(Poly(3).to_string(), "0");
  EXPECT_EQ(p.degree(), 3);
  EXPECT_FALSE(p.is_homogeneous());
}

TEST(Poly, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly a = random_poly(rng, 5, 6, 3), b = random_poly(rng, 5, 5, 3), c = random_poly(rng, 5, 4, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Poly, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(11);
  const std::vector<Rational> point{Rational(2), Rational(-1, 3), Rational(5), Rational(7, 2), Rational(0)};
  for (int trial = 0; trial < 10; ++trial) {
    const Poly a = random_poly(rng, 5, 6, 3), b = random_poly(rng, 5, 6, 3);
    EXPECT_EQ((a * b).evaluate(point), a.evaluate(point) * b.evaluate(point));
    EXPECT_EQ((a + b).evaluate(point), a.evaluate(point) + b.evaluate(point));
  }
}

TEST(Poly, EulerIdentityForHomogeneousPolynomials) {
  const int nv = 4;
  const Poly x = Poly::variable(nv, 0), y = Poly::variable(nv, 1), z = Poly::variable(nv, 3);
  const Poly p = x * x * y * Rational(3) - y * z * z + x * y * z * Rational(1, 7);
  Poly euler(nv);
  for (int v = 0; v < nv; ++v)
    euler += Poly::variable(nv, v) * p.partial(v);
  EXPECT_EQ(euler, p * Rational(3));
}

TEST(Poly, MixedPartialsCommute) {
  std::mt19937_64 rng(3);
  const Poly p = random_poly(rng, 4, 10, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      EXPECT_EQ(p.partial(a).partial(b), p.partial(b).partial(a));
}

TEST(Poly, AccumulatorMatchesOperators) {
  std::mt19937_64 rng(5);
  const Poly a = random_poly(rng, 6, 8, 3), b = random_poly(rng, 6, 8, 3);
  PolyAccumulator acc(6);
  acc.add_product(a, b);
  acc.add_scaled(a, Rational(-2, 3));
  EXPECT_EQ(acc.take(), a * b - a * Rational(2, 3));
}

TEST(QPoly, ArithmeticAndText) {
  const QPoly q = QPoly::monomial(1);
  EXPECT_EQ((q - QPoly::monomial(3)).to_string(), "q-q^3");
  EXPECT_EQ(QPoly::constant(1).to_string(), "1");
  EXPECT_EQ(QPoly().to_string(), "0");
  EXPECT_EQ((QPoly::constant(1) + q) * (QPoly::constant(1) - q), QPoly::constant(1) - q * q);
}

TEST(QPoly, GaussianBinomials) {
  EXPECT_EQ(q_integer(4).to_string(), "1+q+q^2+q^3");
  EXPECT_EQ(q_binomial(4, 2).to_string(), "1+q+2q^2+q^3+q^4");
  EXPECT_EQ(q_binomial(3, 2), q_integer(3));
  EXPECT_EQ(q_binomial(6, 3).at_one(), 20);
  EXPECT_EQ(q_binomial(5, 0), QPoly::constant(1));
}
