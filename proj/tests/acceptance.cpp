// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <iostream>

#include "lieindex/verify.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= 12; ++id) {
    lieindex::CheckResult r = lieindex::run_criterion(id);
    std::printf("criterion %2d %s  %s: %s (%.2fs)\n", id, r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str(), r.seconds);
    for (auto& f : r.failures) std::printf("    failure: %s\n", f.c_str());
    for (auto& w : r.warnings) std::printf("    warning: %s\n", w.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d/12 criteria pass\n", 12 - failed);
  return failed ? 1 : 0;
}
