#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "quadpre/quadpre.hpp"

using namespace quadpre;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + QUADPRE_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, Tree) {
  auto r = run("tree --c -24361/14400 --a -42/25 --depth 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("signature 2,4,6"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("union 12"), std::string::npos);

  auto j = run("tree --c 0 --a 1 --depth 2 --format json");
  ASSERT_EQ(j.status, 0);
  auto doc = json_lines(j.out).at(0);
  EXPECT_EQ(doc["signature"], json({2, 2}));
  EXPECT_EQ(signature(tree_from_json(doc)), (ArrangementSignature{2, 2}));

  EXPECT_EQ(run("tree --c x --a 1 --depth 1").status, 2);
  EXPECT_EQ(run("tree --c 0 --a 1 --depth 1 --bogus").status, 2);
}

TEST(Cli, Critical) {
  auto r = run("critical --n 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("4c^3 + 6c^2 + 2c + 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("256a^3 + 368a^2 + 104a + 23"), std::string::npos) << r.out;
  auto j = json_lines(run("critical --n 2 --format json").out).at(0);
  EXPECT_EQ(poly_from_json(j["avalue_minpoly"]), (QPoly{Rat(1), Rat(4)}));
}

TEST(Cli, EllipticCommands) {
  auto r = run("ec specialize-e24 --a 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("T = (2, 10), order 4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("closed-form j -59319/625"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("j 237276/625"), std::string::npos) << r.out;

  auto j = json_lines(run("ec specialize-e222 --a 4 --format json").out).at(0);
  EXPECT_EQ(curve_from_json(j["curve"]).a2, Rat::parse("1774/13"));
  EXPECT_EQ(j["orders"], json({"infinite", "infinite"}));

  auto o = run("ec order --curve 0,1,0,-9,7 --point 1,0");
  EXPECT_NE(o.out.find("order 2"), std::string::npos);
  EXPECT_EQ(run("ec order --curve 0,1,0,-9,7 --point 1,1").status, 2);

  auto t = json_lines(run("ec torsion --e24 -1 --format json").out).at(0);
  EXPECT_EQ(t["invariants"], json({2, 4}));

  auto f = run("ec family --kind Z2xZ4 --t 1/2");
  EXPECT_NE(f.out.find("excluded"), std::string::npos);
  EXPECT_NE(run("ec curve-244").out.find("order infinite"), std::string::npos);
}

TEST(Cli, ModelAndGenus) {
  auto m = run("model --tag 224");
  EXPECT_EQ(m.status, 0);
  EXPECT_EQ(std::count(m.out.begin(), m.out.end(), '\n'), 5);
  EXPECT_EQ(run("model --tag 999").status, 2);
  auto j = json_lines(run("model --n 3 --format json").out).at(0);
  EXPECT_EQ(j["generators"].size(), 2u);

  auto g = json_lines(run("genus --n 4 --delta 1,1,1,1 --format json").out).at(0);
  EXPECT_EQ(g["genus_with_delta"], "1");
  auto p = json_lines(run("genus --plane-degree 16 --delta 100,1 --format json").out).at(0);
  EXPECT_EQ(p["genus_with_delta"], "4");
  EXPECT_EQ(run("genus --n 4 --delta 9").status, 2);
}

TEST(Cli, SearchJsonLinesAndConfig) {
  auto r = run("search --height-bound 100");
  ASSERT_EQ(r.status, 0);
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  for (const auto& l : lines) EXPECT_EQ(record_from_json(l).signature, (ArrangementSignature{2, 4, 6}));

  auto dir = std::filesystem::temp_directory_path() / "quadpre_cli_test";
  std::filesystem::create_directories(dir);
  auto cfg = dir / "settings.conf";
  std::ofstream(cfg) << "# test settings\nheight_bound = 30\ndisplay_precision = 4\n";
  auto c = run("--config " + cfg.string() + " search --target 2,4,2 --format human");
  EXPECT_EQ(c.status, 0);
  EXPECT_FALSE(c.out.empty());
  std::ofstream(dir / "bad.conf") << "colour = blue\n";
  EXPECT_EQ(run("--config " + (dir / "bad.conf").string() + " search").status, 2);

  EXPECT_EQ(run("search").status, 2);
  EXPECT_EQ(run("search --height-bound 10 --shard 3/3").status, 2);
  EXPECT_EQ(run("search --height-bound 10 --resume").status, 2);

  // Default checkpoint directory from the environment.
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().filename().string().rfind("search-", 0) == 0) std::filesystem::remove(e.path());
  auto env = "PREIMAGE_CHECKPOINT_DIR=" + dir.string();
  EXPECT_EQ(run("search --height-bound 20 --target 2,4,2", env).status, 0);
  bool wrote = false;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    wrote = wrote || e.path().filename().string().rfind("search-", 0) == 0;
  EXPECT_TRUE(wrote);
  auto resumed = run("search --height-bound 20 --target 2,4,2 --resume", env);
  EXPECT_EQ(resumed.status, 0);
  EXPECT_EQ(resumed.out, run("search --height-bound 20 --target 2,4,2").out);
}

TEST(Cli, VerifySections) {
  auto g = run("verify-paper --section genus");
  EXPECT_EQ(g.status, 0);
  EXPECT_NE(g.out.find("[PASS] 2"), std::string::npos) << g.out;
  EXPECT_EQ(run("verify-paper --section delta").status, 0);
  // The E24 closed-form j check fails, and the command says so.
  EXPECT_EQ(run("verify-paper --section e24").status, 1);
  EXPECT_EQ(run("verify-paper --section 9.9").status, 2);
  auto j = json_lines(run("verify-paper --section 244 --format json").out);
  ASSERT_FALSE(j.empty());
  EXPECT_EQ(j.back()["pass"], true);
  // Deterministic and idempotent.
  auto strip = [](std::vector<json> v) {
    for (auto& l : v) l.erase("seconds");
    return v;
  };
  EXPECT_EQ(strip(json_lines(run("verify-paper --section model --format json").out)),
            strip(json_lines(run("verify-paper --section model --format json").out)));
}
