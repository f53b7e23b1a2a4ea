#include <gtest/gtest.h>

#include <set>

#include "quadpre/quadpre.hpp"
#include "quadpre/verify/oracles.hpp"
#include "test_support.hpp"

using namespace quadpre;
using quadpre::testing::R;

namespace {

std::vector<Rat> values(const std::vector<TreeNode>& level) {
  std::vector<Rat> out;
  for (const auto& n : level) out.push_back(n.value);
  return out;
}

QPoly P(std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long c : cs) v.push_back(Rat(c));
  return QPoly(std::move(v));
}

}  // namespace

TEST(Iterate, Examples) {
  EXPECT_EQ(iterate(Rat(-2), Rat(0), 3), Rat(2));
  EXPECT_EQ(iterate(R("-24361/14400"), R("13/120"), 1), R("-42/25"));
  EXPECT_EQ(iterate(Rat(0), Rat(3), 4), Rat(43046721));
}

TEST(Preimages, Examples) {
  auto p = preimages(R("-24361/14400"), R("13/120"));
  EXPECT_EQ(std::set<Rat>(p.begin(), p.end()), (std::set<Rat>{R("161/120"), R("-161/120")}));
  EXPECT_TRUE(preimages(Rat(1), Rat(0)).empty());
  EXPECT_EQ(preimages(Rat(-2), Rat(-2)), std::vector<Rat>{Rat(0)});
}

TEST(PreimageTree, The246Example) {
  auto t = preimage_tree(R("-24361/14400"), R("-42/25"), 3);
  ASSERT_EQ(t.depth(), 3u);
  EXPECT_EQ(values(t.levels[0]), (std::vector<Rat>{R("13/120"), R("-13/120")}));
  EXPECT_EQ(values(t.levels[1]), (std::vector<Rat>{R("161/120"), R("151/120"), R("-151/120"), R("-161/120")}));
  EXPECT_EQ(values(t.levels[2]), (std::vector<Rat>{R("209/120"), R("79/120"), R("71/120"), R("-71/120"),
                                                   R("-79/120"), R("-209/120")}));
  EXPECT_EQ(signature(t), (ArrangementSignature{2, 4, 6}));
  EXPECT_EQ(t.union_count(), 12u);
}

TEST(PreimageTree, TrivialCases) {
  auto t = preimage_tree(Rat(0), Rat(1), 3);
  EXPECT_EQ(signature(t), (ArrangementSignature{2, 2, 2}));
  EXPECT_EQ(t.union_count(), 2u);
  EXPECT_EQ(signature(preimage_tree(Rat(5), Rat(0), 2)), (ArrangementSignature{0, 0}));
  EXPECT_TRUE(preimage_tree(Rat(5), Rat(0), 1).levels[0].empty());
  auto d = preimage_tree(Rat(-2), Rat(2), 3);
  bool has_degenerate = false;
  for (const auto& n : d.levels[2]) has_degenerate = has_degenerate || (n.degenerate && n.value.is_zero());
  EXPECT_TRUE(has_degenerate);
  EXPECT_THROW(preimage_tree(Rat(0), Rat(1), 0), ContractViolation);
}

TEST(PreimageTree, RandomRoundTripAndCounts) {
  oracle::RationalSampler rng(quadpre::testing::seed() + 2);
  for (int k = 0; k < 100; ++k) {
    Rat c = rng.next(40), x = rng.next(40);
    unsigned depth = static_cast<unsigned>(rng.integer(1, 4));
    Rat a = iterate(c, x, depth);
    auto t = preimage_tree(c, a, depth);
    for (std::size_t lvl = 0; lvl < t.depth(); ++lvl) {
      EXPECT_LE(t.levels[lvl].size(), 1UL << (lvl + 1));
      std::size_t prev = lvl == 0 ? 1 : t.levels[lvl - 1].size();
      EXPECT_LE(t.levels[lvl].size(), 2 * prev);
      for (const auto& n : t.levels[lvl]) EXPECT_EQ(iterate(c, n.value, static_cast<unsigned>(lvl + 1)), a);
    }
    EXPECT_EQ(signature(t), oracle::signature_oracle(c, a, depth)) << "c=" << c.str() << " a=" << a.str();
  }
}

TEST(Preimages, AgreeWithBruteForceToHeight50) {
  const auto fr = oracle::fractions_up_to(50, false);
  oracle::RationalSampler rng(quadpre::testing::seed() + 3);
  for (int k = 0; k < 25; ++k) {
    Rat c = rng.next(50);
    Rat y = pow(rng.next(50), 2) + c;
    auto got = preimages(c, y);
    EXPECT_EQ(std::set<Rat>(got.begin(), got.end()), oracle::preimages_brute(c, y, fr));
  }
}

TEST(Critical, Polynomials) {
  EXPECT_EQ(critical_poly(2), P({1, 2}));
  EXPECT_EQ(critical_poly(3), P({1, 2, 6, 4}));
  EXPECT_EQ(critical_poly(4), P({1, 2, 6, 20, 30, 36, 28, 8}));
  for (unsigned n = 2; n <= 6; ++n) {
    EXPECT_EQ(critical_poly(n).degree(), (1 << (n - 1)) - 1);
    EXPECT_EQ(critical_poly(n).constant_term(), Rat(1));
  }
}

TEST(Critical, AValues) {
  EXPECT_EQ(critical_avalues(2).avalue_minpoly, P({1, 4}));
  EXPECT_EQ(critical_avalues(3).avalue_minpoly, P({23, 104, 368, 256}));
  QPoly m4 = critical_avalues(4).avalue_minpoly;
  EXPECT_EQ(m4, P({-58673, 288464, 1395104, 5791488, 25288448, 27009024, 37683200, 16777216}));
  EXPECT_TRUE(is_critical_value(R("-1/4"), 2));
  EXPECT_FALSE(is_critical_value(Rat(0), 4));
  EXPECT_FALSE(is_critical_value(Rat(2), 4));
}
