#include <gtest/gtest.h>

#include "quadpre/quadpre.hpp"
#include "quadpre/verify/oracles.hpp"
#include "test_support.hpp"

using namespace quadpre;
using quadpre::testing::R;

namespace {

QPoly P(std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long c : cs) v.push_back(Rat(c));
  return QPoly(std::move(v));
}

}  // namespace

TEST(IntSqrt, Examples) {
  EXPECT_EQ(int_sqrt(BigInt(25921)), BigInt(161));
  EXPECT_EQ(int_sqrt(BigInt(0)), BigInt(0));
  EXPECT_FALSE(int_sqrt(BigInt(2)));
}

TEST(RatSqrt, Examples) {
  EXPECT_EQ(rat_sqrt(R("169/14400")), R("13/120"));
  EXPECT_EQ(rat_sqrt(R("1")), R("1"));
  EXPECT_FALSE(rat_sqrt(R("-1/4")));
  EXPECT_FALSE(rat_sqrt(R("2/9")));
}

TEST(Height, Examples) {
  EXPECT_EQ(height(R("-24361/14400")), BigInt(24361));
  EXPECT_EQ(height(R("0")), BigInt(1));
  EXPECT_EQ(height(R("7")), BigInt(7));
}

TEST(RatParse, ReportsPosition) {
  EXPECT_EQ(R("-6/4"), R("-3/2"));
  try {
    Rat::parse("12/x");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(Rat::parse("1/0"), ParseError);
  EXPECT_THROW(Rat::parse(""), ParseError);
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(P({-1, 0, 1}), P({-1, 1})), Rat(0));
  EXPECT_EQ(resultant(P({1, 0, 1}), P({-1, 1})), Rat(2));
  EXPECT_EQ(resultant(P({-3, 1}), P({-5, 1})), Rat(-2));
  EXPECT_THROW(resultant(QPoly(), QPoly()), ContractViolation);
}

TEST(Resultant, MatchesSylvesterOnRandomPolynomials) {
  oracle::RationalSampler rng(quadpre::testing::seed());
  for (int k = 0; k < 60; ++k) {
    QPoly f = rng.poly(5, 12), g = rng.poly(5, 12);
    if (f.is_zero() || g.is_zero()) continue;
    EXPECT_EQ(resultant(f, g), oracle::sylvester_resultant(f, g)) << f.to_string() << " , " << g.to_string();
  }
}

TEST(EliminateC, Examples) {
  auto orbit3 = BiPoly::a_var() - BiPoly::c_poly(P({0, 1, 1, 2, 1}));  // a - (c^4 + 2c^3 + c^2 + c)
  EXPECT_EQ(eliminate_c(BiPoly::c_poly(P({1, 2, 6, 4})), orbit3), P({23, 104, 368, 256}));
  EXPECT_EQ(eliminate_c(BiPoly::c_poly(P({1, 2})), BiPoly::a_var() - BiPoly::c_poly(P({0, 1, 1}))), P({1, 4}));
  EXPECT_EQ(eliminate_c(BiPoly::c_poly(P({0, 1})), BiPoly::a_var() - BiPoly::c_poly(P({0, 1}))), P({0, 1}));
  EXPECT_THROW(eliminate_c(BiPoly::a_var(), BiPoly::c_poly(P({0, 1}))), ContractViolation);
}

TEST(NumberField, Examples) {
  auto m = NFElem::make_modulus(P({-2, 0, 1}));
  NFElem x = NFElem::generator(m);
  NFElem one = from_rational(x, Rat(1));
  EXPECT_EQ((x + one) * (x - one), one);

  auto m3 = NFElem::make_modulus(P({-2, 0, 0, 1}));
  NFElem y = NFElem::generator(m3);
  EXPECT_EQ(nf_inv(y).rep(), QPoly::monomial(R("1/2"), 2));
  EXPECT_THROW(x + y, ContractViolation);
}

TEST(NumberField, SquareRootTowerPolynomial) {
  QPoly f = square_root_tower_poly(P({1, 2, 6, 4}), Rat(-2));
  EXPECT_EQ(f, P({-2, 0, 2, 0, -3, 0, 1}));
  // Re-substitution: alpha = -beta^2/2 is a root of 4c^3 + 6c^2 + 2c + 1.
  auto m = NFElem::make_modulus(f);
  NFElem b = NFElem::generator(m);
  NFElem a = R("-1/2") * (b * b);
  EXPECT_TRUE((Rat(4) * a * a * a + Rat(6) * a * a + Rat(2) * a + from_rational(a, Rat(1))).is_zero());
}

TEST(NumberField, NonInvertibleCarriesFactor) {
  auto m = NFElem::make_modulus(P({-1, 0, 1}));  // (x - 1)(x + 1)
  NFElem x = NFElem::generator(m);
  try {
    (x - from_rational(x, Rat(1))).inverse();
    FAIL() << "expected NotInvertible";
  } catch (const NotInvertible& e) {
    EXPECT_EQ(e.factor().degree(), 1);
  }
}

TEST(Factorize, ReconstructsRandomProducts) {
  oracle::RationalSampler rng(quadpre::testing::seed() + 1);
  for (int k = 0; k < 30; ++k) {
    BigInt n = 1;
    for (int j = 0; j < 4; ++j) n *= BigInt(rng.integer(2, 1000000));
    BigInt back = 1;
    for (const auto& [p, e] : factorize(n)) {
      EXPECT_TRUE(detail::is_probable_prime(p));
      back *= big_pow(p, e);
    }
    EXPECT_EQ(back, n);
  }
}

TEST(Factorize, BudgetExceeded) {
  BigInt semiprime = BigInt("1000000000000000003") * BigInt("1000000000000000009");
  EXPECT_THROW(factorize(semiprime, FactorBudget{100, 10}), FactorizationBudgetExceeded);
}
