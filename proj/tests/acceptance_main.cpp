// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// pass.  Run directly or through ctest.
#include <cstdio>

#include "lospec/acceptance.hpp"

int main() {
  lospec::acceptance::Options opts;
  opts.max_k = 4;
  opts.positivity_k = 6;
  auto results = lospec::acceptance::run_all(opts);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s criterion %2d [%6.2fs] %s\n", r.pass ? "PASS" : "FAIL", r.index, r.seconds,
                r.name.c_str());
    if (!r.detail.empty()) std::printf("      %s\n", r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}
