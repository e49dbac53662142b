// Acceptance suite: runs every battery criterion and prints one line per
// criterion. Exit code 0 only when all criteria pass.

#include <cstdio>

#include "inose/battery.hpp"

int main() {
  const auto results = inose::run_battery();
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] criterion %d: %s - %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.index,
                r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
