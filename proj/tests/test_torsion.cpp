#include <gtest/gtest.h>

#include <set>

#include "quadpre/quadpre.hpp"
#include "test_support.hpp"

using namespace quadpre;
using quadpre::testing::R;

namespace {

std::set<std::pair<Rat, Rat>> affine(const TorsionGroup& g) {
  std::set<std::pair<Rat, Rat>> out;
  for (const auto& p : g.points)
    if (!p.is_infinity()) out.insert({p.x(), p.y()});
  return out;
}

void expect_routes_agree(const WeierstrassCurve& e) {
  auto a = torsion_subgroup(e, {}, TorsionMethod::Enumerate);
  auto b = torsion_subgroup(e, {}, TorsionMethod::DivisionPolynomials);
  EXPECT_EQ(a.n1, b.n1);
  EXPECT_EQ(a.n2, b.n2);
  EXPECT_EQ(affine(a), affine(b));
}

}  // namespace

TEST(Torsion, E24AtOneIsZ4) {
  auto g = torsion_subgroup(specialize_E24(Rat(1)).curve);
  EXPECT_EQ(g.n1, 1u);
  EXPECT_EQ(g.n2, 4u);
}

TEST(Torsion, Z2xZ4FamilyTwoTorsion) {
  auto g = torsion_subgroup(specialize_E24(Rat(-1)).curve);
  EXPECT_TRUE(g.contains(2, 4));
  std::set<Rat> xs;
  for (const auto& p : g.points)
    if (!p.is_infinity() && p.y().is_zero()) xs.insert(p.x());
  EXPECT_EQ(xs, (std::set<Rat>{Rat(5), Rat(4), Rat(-4)}));
}

TEST(Torsion, Z8FamilyGenerator) {
  auto e = specialize_E24(Rat(2)).curve;
  auto g = torsion_subgroup(e);
  EXPECT_TRUE(g.contains(1, 8));
  ECPoint P(Rat(20), Rat(108));
  EXPECT_TRUE(on_curve(e, P));
  EXPECT_EQ(point_order(e, P), 8u);
  bool listed = false;
  for (const auto& p : g.points) listed = listed || p == P;
  EXPECT_TRUE(listed);
}

TEST(Torsion, RoutesAgree) {
  expect_routes_agree(specialize_E24(Rat(1)).curve);
  expect_routes_agree(specialize_E24(Rat(2)).curve);
  expect_routes_agree(specialize_E24(Rat(-1)).curve);
  expect_routes_agree(specialize_E24(*torsion_family_a(TorsionKind::Z2xZ8, Rat(3))).curve);
  expect_routes_agree(specialize_E24(*torsion_family_a(TorsionKind::Z8, Rat(3))).curve);
  expect_routes_agree(curve_244().curve);
  expect_routes_agree(specialize_E222(Rat(4)).curve);
}

TEST(Torsion, Z12FamilyByDivisionPolynomials) {
  for (const char* t : {"2", "1/3", "-1"}) {
    auto a = torsion_family_a(TorsionKind::Z12, R(t));
    ASSERT_TRUE(a);
    auto g = torsion_subgroup(specialize_E24(*a).curve, {}, TorsionMethod::DivisionPolynomials);
    EXPECT_EQ(g.n1, 1u) << "t = " << t;
    EXPECT_EQ(g.n2, 12u) << "t = " << t;
  }
}

TEST(Torsion, IntegralModelAtZ12Parameter) {
  auto a = torsion_family_a(TorsionKind::Z12, Rat(2));
  auto m = integral_cubic_model(specialize_E24(*a).curve);
  EXPECT_EQ(m.u, BigInt("1936565862400"));
}

TEST(Torsion, SingularCurveRejected) {
  EXPECT_THROW(torsion_subgroup(specialize_E24(Rat(0)).curve), ContractViolation);
}

TEST(Torsion, FactorizationBudget) {
  // Denominator with two 19-digit prime factors; a tiny budget cannot split it.
  Rat a(BigInt(1), BigInt("1000000000000000003") * BigInt("1000000000000000009"));
  EXPECT_THROW(torsion_subgroup(specialize_E24(a).curve, FactorBudget{100, 10}), FactorizationBudgetExceeded);
}
