#include <gtest/gtest.h>

#include "quadpre/quadpre.hpp"
#include "quadpre/verify/oracles.hpp"
#include "test_support.hpp"

using namespace quadpre;
using quadpre::testing::R;

TEST(Json, RationalsAndPolynomials) {
  EXPECT_EQ(rat_json(R("-24361/14400")), "-24361/14400");
  EXPECT_EQ(rat_json(Rat(7)), "7");
  EXPECT_EQ(rat_from_json(json("3/6")), R("1/2"));
  EXPECT_THROW(rat_from_json(json(3)), ParseError);
  QPoly p{Rat(23), Rat(104), Rat(368), Rat(256)};
  EXPECT_EQ(poly_json(p).dump(), R"(["23","104","368","256"])");
  EXPECT_EQ(poly_from_json(json::parse(poly_json(p).dump())), p);
}

TEST(Json, TreeRoundTrip) {
  auto t = preimage_tree(R("-24361/14400"), R("-42/25"), 3);
  json j = tree_json(t);
  EXPECT_EQ(j["signature"], json({2, 4, 6}));
  EXPECT_EQ(j["union_count"], 12);
  auto back = tree_from_json(json::parse(j.dump()));
  EXPECT_EQ(tree_json(back), j);
  EXPECT_EQ(signature(back), signature(t));

  json bad = j;
  bad["levels"][1][0] = "5";
  EXPECT_THROW(tree_from_json(bad), ParseError);
}

TEST(Json, RandomTreesRoundTrip) {
  oracle::RationalSampler rng(quadpre::testing::seed() + 7);
  for (int k = 0; k < 40; ++k) {
    Rat c = rng.next(30), x = rng.next(30);
    auto t = preimage_tree(c, iterate(c, x, 3), 3);
    EXPECT_EQ(tree_json(tree_from_json(json::parse(tree_json(t).dump()))), tree_json(t));
  }
}

TEST(Json, CurveAndPoints) {
  auto f = specialize_E222(Rat(4));
  json j = curve_json(f.curve);
  EXPECT_EQ(j["a2"], "1774/13");
  EXPECT_EQ(j["singular"], false);
  auto e = curve_from_json(json::parse(j.dump()));
  EXPECT_EQ(e.a6, f.curve.a6);
  EXPECT_EQ(curve_json(specialize_E24(Rat(0)).curve)["j"], nullptr);
  for (const auto& p : {ECPoint::infinity(), ECPoint(R("-262/13"), Rat(136))})
    EXPECT_EQ(point_from_json(json::parse(point_json(p).dump())), p);
}

TEST(Json, SearchRecordRoundTrip) {
  SearchConfig cfg;
  cfg.height_bound = 20;
  cfg.target = {2, 4, 2};
  auto res = run_search(cfg);
  ASSERT_FALSE(res.records.empty());
  for (const auto& r : res.records) {
    json j = record_json(r);
    auto back = record_from_json(json::parse(j.dump()));
    EXPECT_EQ(record_json(back), j);
    EXPECT_EQ(back.provenance, r.provenance);
  }
}
