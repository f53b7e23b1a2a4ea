// Acceptance runner: one PASS/FAIL line per criterion, failing checks listed
// beneath it. Exit status is 0 iff the set of failing criteria equals the
// --xfail set exactly, so a known failure stays visible without masking a
// regression, and an unexpected pass is reported too.

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quadpre/verify/checks.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<unsigned> only, xfail;
  bool verbose = false;
  quadpre::verify::Options opt;
  app.add_option("--only", only, "run only these criteria")->check(CLI::Range(1, 11));
  app.add_option("--xfail", xfail, "criteria expected to fail")->check(CLI::Range(1, 11));
  app.add_option("--seed", opt.seed, "seed for the randomized suites");
  app.add_flag("-v,--verbose", verbose, "list every check");
  CLI11_PARSE(app, argc, argv);

  std::printf("seed %llu\n", static_cast<unsigned long long>(opt.seed));
  const auto& all = quadpre::verify::criteria();
  std::set<unsigned> failed;
  for (unsigned n = 1; n <= all.size(); ++n) {
    if (!only.empty() && std::find(only.begin(), only.end(), n) == only.end()) continue;
    auto report = all[n - 1](opt);
    bool ok = report.pass();
    if (!ok) failed.insert(n);
    bool expected_fail = std::find(xfail.begin(), xfail.end(), n) != xfail.end();
    std::printf("criterion %2u: %s  %s [%.2f s, budget %.0f s]%s\n", n, ok ? "PASS" : "FAIL", report.title.c_str(),
                report.seconds, report.budget_seconds, !ok && expected_fail ? " (expected failure)" : "");
    for (const auto& c : report.checks) {
      if (c.pass && !verbose) continue;
      std::printf("    %s %s: %s%s%s\n", c.pass ? "ok  " : "FAIL", c.anchor.c_str(), c.name.c_str(),
                  c.detail.empty() ? "" : " -- ", c.detail.c_str());
    }
    if (!report.within_budget()) std::printf("    FAIL runtime over budget\n");
    std::fflush(stdout);
  }

  std::set<unsigned> expected;
  for (unsigned n : xfail)
    if (only.empty() || std::find(only.begin(), only.end(), n) != only.end()) expected.insert(n);
  for (unsigned n : expected)
    if (!failed.count(n)) std::printf("criterion %u was expected to fail but passed\n", n);
  std::printf("%zu criteria failed, %zu expected\n", failed.size(), expected.size());
  return failed == expected ? 0 : 1;
}
