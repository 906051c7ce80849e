// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "bergcomm/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240917ULL;
  double total = 0.0;
  int failed = 0;
  for (const auto& r : bergcomm::run_acceptance(seed)) {
    std::printf("[%s] criterion %2d: %s (%.2f s)\n    %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.detail.c_str());
    total += r.seconds;
    failed += r.pass ? 0 : 1;
  }
  const bool in_budget = total < bergcomm::kSuiteBudgetSeconds;
  std::printf("[%s] suite runtime %.2f s (budget %.0f s)\n", in_budget ? "PASS" : "FAIL", total,
              bergcomm::kSuiteBudgetSeconds);
  std::printf("%d of %d criteria failed\n", failed, bergcomm::kCriterionCount);
  return failed == 0 && in_budget ? 0 : 1;
}
