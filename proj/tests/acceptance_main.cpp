// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <cstdio>

#include "weylgpd/selftest.hpp"

int main() {
  bool all = true;
  for (const wgd::CriterionResult& r : wgd::run_acceptance_suite()) {
    std::printf("%s  %d  %s  [%s]\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    all = all && r.passed;
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
