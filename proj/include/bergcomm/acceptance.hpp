#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bergcomm {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  /// Measured quantities behind the verdict, one short line.
  std::string detail;
  double seconds = 0.0;
};

/// Criterion ids 1..10. `seed` drives every randomized corpus and the
/// Monte-Carlo oracle; the same seed gives the same numbers.
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

inline constexpr int kCriterionCount = 10;
/// Budget for the whole suite, single-threaded.
inline constexpr double kSuiteBudgetSeconds = 60.0;

}  // namespace bergcomm
