#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "quadpre/quadpre.hpp"
#include "quadpre/verify/oracles.hpp"
#include "test_support.hpp"

using namespace quadpre;
using quadpre::testing::R;

namespace {

std::string temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "quadpre_tests";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::filesystem::remove(p);
  return p.string();
}

std::set<std::pair<Rat, Rat>> keys(const std::vector<SearchRecord>& rs) {
  std::set<std::pair<Rat, Rat>> out;
  for (const auto& r : rs) out.insert({r.c, r.a});
  return out;
}

bool same_stream(const std::vector<SearchRecord>& x, const std::vector<SearchRecord>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i].c == y[i].c && x[i].a == y[i].a && x[i].signature == y[i].signature &&
          x[i].provenance == y[i].provenance))
      return false;
  return true;
}

struct Interrupted {};

}  // namespace

TEST(VerifyPair, Examples) {
  auto rec = verify_pair(R("-24361/14400"), R("-42/25"), {2, 4, 6}, 3);
  ASSERT_TRUE(rec);
  EXPECT_EQ(rec->signature, (ArrangementSignature{2, 4, 6}));
  EXPECT_FALSE(verify_pair(Rat(0), Rat(1), {2, 4, 6}, 3));
  EXPECT_TRUE(verify_pair(R("-5248/2025"), R("726745984/284765625"), {2, 4, 6}, 3));
  EXPECT_THROW(verify_pair(Rat(0), Rat(1), {2, 4, 6}, 2), ContractViolation);
}

TEST(Config, Validation) {
  SearchConfig cfg;
  cfg.height_bound = 0;
  EXPECT_THROW(cfg.validate(), ContractViolation);
  cfg.height_bound = 10;
  cfg.shard_index = 3;
  cfg.shard_total = 3;
  EXPECT_THROW(cfg.validate(), ContractViolation);
  cfg.shard_index = 0;
  cfg.target = {2, 4};
  EXPECT_THROW(cfg.validate(), ContractViolation);
  cfg.strategy = Strategy::Forward;
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_EQ(parse_strategy("forward"), Strategy::Forward);
}

// Increasing height, ascending value within each height.
TEST(Candidates, OrderAndCount) {
  auto c = enumerate_candidates(3);
  std::vector<Rat> v;
  for (const auto& k : c) v.push_back(k.value());
  EXPECT_EQ(v, (std::vector<Rat>{Rat(0), Rat(1), R("1/2"), Rat(2), R("1/3"), R("2/3"), R("3/2"), Rat(3)}));
}

TEST(ScanThirdpair, SmallBounds) {
  SearchConfig cfg;
  cfg.height_bound = 1;
  EXPECT_TRUE(scan_thirdpair(cfg).records.empty());
  cfg.height_bound = 209;
  auto res = scan_thirdpair(cfg);
  EXPECT_TRUE(keys(res.records).count({R("-24361/14400"), R("-42/25")}));
  for (const auto& r : res.records)
    if (r.c == R("-24361/14400")) {
      bool seen = false;
      for (const auto& p : r.provenance) seen = seen || p.params == std::vector<Rat>{R("71/120"), R("209/120")};
      EXPECT_TRUE(seen);
    }
}

TEST(ScanThirdpair, MatchesBruteForce) {
  const long H = 25;
  auto brute = oracle::thirdpair_brute(H, 3);
  for (const ArrangementSignature& t : {ArrangementSignature{2, 4, 4}, ArrangementSignature{2, 2, 2},
                                        ArrangementSignature{2, 4, 2}, ArrangementSignature{0, 0, 2}}) {
    SearchConfig cfg;
    cfg.height_bound = H;
    cfg.target = t;
    EXPECT_EQ(keys(scan_thirdpair(cfg).records), oracle::filter_dominating(brute, t));
  }
}

TEST(ScanForward, Examples) {
  SearchConfig cfg;
  cfg.strategy = Strategy::Forward;
  cfg.height_bound = 2;
  cfg.depth = 2;
  cfg.target = {2, 2};
  auto res = scan_forward(cfg);
  EXPECT_TRUE(keys(res.records).count({Rat(0), Rat(16)}));
  EXPECT_THROW(scan_thirdpair(cfg), ContractViolation);

  cfg.depth = 3;
  cfg.target = {1, 1, 1};
  auto deg = scan_forward(cfg);
  bool found = false;
  for (const auto& r : deg.records)
    if (r.c == Rat(-2) && r.a == Rat(2))
      for (const auto& n : r.tree.levels[2]) found = found || n.degenerate;
  EXPECT_TRUE(found);
}

TEST(Search, ShardsAndThreadsMatchUnsharded) {
  SearchConfig cfg;
  cfg.height_bound = 30;
  cfg.target = {2, 4, 2};
  auto whole = merge_shards({run_search(cfg).records});
  std::vector<std::vector<SearchRecord>> parts;
  for (unsigned i = 0; i < 4; ++i) {
    SearchConfig s = cfg;
    s.shard_index = i;
    s.shard_total = 4;
    parts.push_back(run_search(s).records);
  }
  EXPECT_TRUE(same_stream(merge_shards(parts), whole));
  EXPECT_TRUE(same_stream(run_search_parallel(cfg, 3).records, whole));
}

TEST(Checkpoint, ResumeEqualsUninterruptedRun) {
  SearchConfig cfg;
  cfg.height_bound = 30;
  cfg.target = {2, 4, 2};
  auto expected = run_search(cfg).records;

  cfg.checkpoint_path = temp_path("resume.json");
  cfg.checkpoint_every = 50;
  std::size_t calls = 0;
  EXPECT_THROW(run_search(cfg,
                          [&](std::size_t, std::size_t) {
                            if (++calls == 175) throw Interrupted{};
                          }),
               Interrupted);
  ASSERT_TRUE(std::filesystem::exists(*cfg.checkpoint_path));
  cfg.resume = true;
  auto resumed = run_search(cfg);
  EXPECT_EQ(resumed.stats.resumed_from, 150u);
  EXPECT_TRUE(same_stream(merge_shards({resumed.records}), merge_shards({expected})));
}

TEST(Checkpoint, RejectsOtherConfiguration) {
  SearchConfig cfg;
  cfg.height_bound = 12;
  cfg.target = {2, 4, 2};
  cfg.checkpoint_path = temp_path("mismatch.json");
  run_search(cfg);
  cfg.height_bound = 13;
  cfg.resume = true;
  EXPECT_THROW(run_search(cfg), CheckpointError);

  std::ofstream(*cfg.checkpoint_path) << "not json";
  EXPECT_THROW(run_search(cfg), CheckpointError);
}

TEST(Checkpoint, UnwritablePath) {
  SearchConfig cfg;
  cfg.height_bound = 5;
  cfg.checkpoint_path = "/nonexistent-dir/x/checkpoint.json";
  EXPECT_THROW(run_search(cfg), CheckpointError);
}

TEST(Search, ConfigHashDistinguishesSettings) {
  SearchConfig a, b;
  a.height_bound = b.height_bound = 10;
  b.target = {2, 4, 4};
  EXPECT_NE(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a), config_hash(a));
}
