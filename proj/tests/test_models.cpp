#include <gtest/gtest.h>

#include "quadpre/quadpre.hpp"
#include "quadpre/verify/oracles.hpp"
#include "test_support.hpp"

using namespace quadpre;
using quadpre::testing::R;

TEST(IdealJ, DisplayedGenerators) {
  auto j2 = ideal_J(2);
  ASSERT_EQ(j2.generators().size(), 1u);
  EXPECT_EQ(j2.num_vars(), 3u);
  // Z1^2 + Z1 Z2 - Z0^2 - a Z2^2 at a few points.
  std::vector<Rat> z{Rat(2), Rat(3), Rat(5)};
  EXPECT_EQ(j2.evaluate(0, z, Rat(7)), Rat(9 + 15 - 4 - 175));

  auto j3 = ideal_J(3);
  ASSERT_EQ(j3.generators().size(), 2u);
  std::vector<Rat> w{Rat(1), Rat(-2), Rat(3), Rat(4)};
  Rat a(5);
  // z2^2 + z1 z3 - z0^2 - a z3^2 and z2^2 + z2 z3 - z1^2 - a z3^2.
  EXPECT_EQ(j3.evaluate(0, w, a), Rat(9 - 8 - 1 - 80));
  EXPECT_EQ(j3.evaluate(1, w, a), Rat(9 + 12 - 4 - 80));
  EXPECT_EQ(ideal_J(4).generators().size(), 3u);
  EXPECT_THROW(ideal_J(1), ContractViolation);
}

TEST(IdealJ, PsiMapLandsOnModel) {
  oracle::RationalSampler rng(quadpre::testing::seed() + 6);
  for (int k = 0; k < 50; ++k) {
    unsigned n = static_cast<unsigned>(rng.integer(2, 5));
    Rat c = rng.next(30), x = rng.next(30);
    std::vector<Rat> p{x};
    for (unsigned i = 1; i < n; ++i) p.push_back(p.back() * p.back() + c);
    p.push_back(Rat(1));
    auto m = ideal_J(n);
    for (std::size_t g = 0; g < m.generators().size(); ++g) EXPECT_TRUE(m.evaluate(g, p, iterate(c, x, n)).is_zero());
  }
}

TEST(ArrangementCurve, Shapes) {
  auto c224 = arrangement_curve(ArrangementTag::T224);
  EXPECT_EQ(c224.generators().size(), 3u);
  EXPECT_EQ(c224.ambient_dim(), 4u);
  EXPECT_EQ(generator_string(c224, 0), "s*s - t*t - t*z + a*z*z");
  auto c242 = arrangement_curve(ArrangementTag::T242);
  EXPECT_EQ(generator_string(c242, 1), "-t*t + t*z + u*u + a*z*z");
  auto c2222 = arrangement_curve(ArrangementTag::T2222);
  EXPECT_EQ(c2222.generators().size(), 3u);
  EXPECT_EQ(c2222.ambient_dim(), 5u);
  EXPECT_EQ(parse_arrangement_tag("242"), ArrangementTag::T242);
  EXPECT_THROW(parse_arrangement_tag("248"), ContractViolation);
}

TEST(ArrangementCurve, ExportFormat) {
  std::string text = export_model(arrangement_curve(ArrangementTag::T224));
  EXPECT_EQ(text.rfind("# C224 in P^4\nvars: q r s t z\n", 0), 0u) << text;
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

TEST(Genus, ClosedAndHilbert) {
  EXPECT_EQ(genus_closed(2), 0);
  EXPECT_EQ(genus_closed(3), 1);
  EXPECT_EQ(genus_closed(4), 5);
  EXPECT_EQ(genus_hilbert(3), 1);
  EXPECT_EQ(genus_hilbert(4), 5);
  EXPECT_EQ(genus_hilbert(8), 321);
  for (unsigned n = 2; n <= 20; ++n) EXPECT_EQ(genus_closed(n), genus_hilbert(n)) << n;
  EXPECT_EQ(hilbert_phi(3, -2), 0);
  EXPECT_EQ(hilbert_phi(3, -4), -1);
}

TEST(Genus, DeltaBookkeeping) {
  EXPECT_EQ(genus_with_delta(4, {1, 1, 1, 1}), 1);
  EXPECT_EQ(genus_with_delta(4, {2}), 3);
  EXPECT_EQ(genus_with_delta(4, {}), 5);
  EXPECT_EQ(genus_with_delta_plane(16, {100, 1, 1}), 3);
  EXPECT_EQ(genus_with_delta_plane(16, {100, 1}), 4);
  EXPECT_THROW(genus_with_delta(4, {6}), ContractViolation);
  EXPECT_THROW(genus_with_delta(4, {0}), ContractViolation);
}

TEST(Infinity, PointsOnModel) {
  auto p2 = infinity_points(2);
  EXPECT_EQ(p2, (std::vector<SignVector>{{1, 1}, {-1, 1}}));
  EXPECT_EQ(infinity_points(3).size(), 4u);
  auto pts = infinity_points(5);
  EXPECT_EQ(pts.size(), 16u);
  auto m = ideal_J(5);
  const QPoly a = a_poly();
  for (const auto& eps : pts) {
    auto proj = infinity_point_coords(eps, a);
    for (std::size_t g = 0; g < m.generators().size(); ++g) EXPECT_TRUE(m.evaluate(g, proj, a).is_zero());
  }
}

TEST(Jacobian, MinorFormulasAndCertificates) {
  auto c = arrangement_curve(ArrangementTag::T224);
  // Origin at a = 0.
  EXPECT_TRUE(is_singular_point(c, 4, std::vector<Rat>(4, Rat(0)), Rat(0)));
  // Cusp (1 : 1 : 1 : 1 : 0) in the q chart: first minor -8rst = -8.
  auto m = jacobian_minors(c, 0, std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(0)}, Rat(3));
  EXPECT_EQ(m.at(0), Rat(-8));
  EXPECT_FALSE(is_singular_point(c, 0, std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(0)}, Rat(3)));
  // Off-model points are rejected with the generator that fails.
  try {
    jacobian_minors(c, 4, std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)}, Rat(0));
    FAIL() << "expected OffModel";
  } catch (const OffModel& e) {
    EXPECT_EQ(e.generator(), 1u);
  }
  EXPECT_THROW(jacobian_minors(c, 9, std::vector<Rat>(4, Rat(0)), Rat(0)), ContractViolation);
}

TEST(Jacobian, NumberFieldSingularPoint) {
  QPoly f = square_root_tower_poly(QPoly{Rat(1), Rat(2), Rat(6), Rat(4)}, Rat(-2));
  auto mod = NFElem::make_modulus(f);
  NFElem beta = NFElem::generator(mod);
  NFElem alpha = R("-1/2") * (beta * beta);
  NFElem a1 = alpha * alpha * alpha * alpha + Rat(2) * alpha * alpha * alpha + alpha * alpha + alpha;
  std::vector<NFElem> pt{from_rational(alpha, Rat(0)), -beta, alpha, alpha * alpha + alpha};
  EXPECT_TRUE(is_singular_point(arrangement_curve(ArrangementTag::T224), 4, pt, a1));
  // Same point at a different a is not on the curve.
  EXPECT_THROW(is_singular_point(arrangement_curve(ArrangementTag::T224), 4, pt, a1 + from_rational(a1, Rat(1))),
               OffModel);
}
