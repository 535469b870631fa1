// Runs the twelve acceptance criteria and prints one line per criterion.

#include <cstdio>

#include "qsv/acceptance.hpp"

int main() {
  auto results = qsv::run_acceptance();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %2d %s (%.1f ms): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.runtime_ms,
                r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%s\n", failed == 0 ? "all criteria passed" : "some criteria failed");
  return failed == 0 ? 0 : 1;
}
