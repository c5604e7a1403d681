// One line per acceptance criterion; exit status 0 iff all of them pass.
// Optional arguments restrict the run to the listed criterion ids.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "lefschetz/acceptance.hpp"

int main(int argc, char **argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i)
    ids.push_back(std::atoi(argv[i]));

  int failed = 0;
  lefschetz::run_acceptance(ids, [&](const lefschetz::CriterionResult &r) {
    std::printf("%s  criterion %2d  %-52s %8.3fs (limit %gs)  %s\n",
                r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.time_limit_seconds, r.detail.c_str());
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  });
  std::printf("%s: %d failing criteria\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
