// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <cstdio>

#include "qclass/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& c : qclass::acceptance::run_all()) {
    std::printf("criterion %2d: %s  %s (%.3f s) | %s\n", c.id, c.pass ? "PASS" : "FAIL", c.title.c_str(), c.seconds,
                c.detail.c_str());
    failed += !c.pass;
  }
  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
