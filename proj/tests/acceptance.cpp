// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure.  The same criteria back the CLI's `suite` verb.

#include <cstdio>

#include "actforge/suite.hpp"

int main() {
  const auto results = actforge::run_acceptance_suite();
  for (const auto& r : results) {
    std::printf("%s  criterion %2d: %-52s %s (%.2fs)\n",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
  }
  if (!actforge::all_passed(results)) {
    std::printf("RESULT: FAIL\n");
    return 1;
  }
  std::printf("RESULT: PASS\n");
  return 0;
}
