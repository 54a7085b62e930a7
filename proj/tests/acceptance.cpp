// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Runtime limits are part of the contract and enforced here.

#include <cstdio>
#include <cstdlib>

#include "cyhodge/suite.hpp"

int main(int argc, char** argv) {
  using namespace cyhodge;
  SuiteConfig cfg;
  cfg.seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;

  Report rep = run_paper_suite(cfg);

  // seconds allowed per criterion, in report order; 0 = no limit stated
  const double limits[12] = {1, 5, 30, 0, 0, 60, 0, 1, 0, 0, 0, 0};

  bool ok = true;
  for (size_t i = 0; i < rep.results.size(); ++i) {
    const CheckResult& c = rep.results[i];
    double t = i < rep.timings_seconds.size() ? rep.timings_seconds[i] : 0.0;
    bool pass = c.verdict == "PASS";
    bool in_time = i >= 12 || limits[i] <= 0 || t < limits[i];
    ok = ok && pass && in_time;
    std::printf("[%s] %2zu %-24s %s (%.2fs%s)\n", pass && in_time ? "PASS" : "FAIL",
                i + 1, c.name.c_str(), c.actual.c_str(), t,
                in_time ? "" : " OVER TIME LIMIT");
  }
  std::printf("%s\n", ok ? "acceptance: all criteria pass"
                         : "acceptance: FAILURES present");
  return ok ? 0 : 1;
}
