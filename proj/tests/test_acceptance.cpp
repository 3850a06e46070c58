// End-to-end acceptance gate: runs the full verification suite and prints
// one pass/fail line per criterion.
#include <cstdio>

#include "carnot/paperchecks.hpp"

int main() {
  auto results = paperchecks::run_all();
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] criterion %d: %s%s%s\n", r.pass ? "PASS" : "FAIL", r.number,
                r.title.c_str(), r.detail.empty() ? "" : " -- ",
                r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES");
  return all ? 0 : 1;
}
