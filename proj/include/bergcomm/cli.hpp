#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bergcomm {

/// One command-line invocation. Symbol and set fields hold a path or
/// inline JSON (anything starting with '{').
struct RunConfig {
  std::string command;
  /// Taken from the symbol or index arguments when not given.
  std::optional<int> n;
  double alpha = 0.0;
  std::optional<int> degree;
  std::string f;
  std::string g;
  std::string symbol;
  std::string set;
  /// A matrix report written by `matrix` (or its "matrix" member).
  std::string matrix;
  std::string out;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::size_t samples = 0;
  std::optional<double> tol;
  std::vector<int> m;
  std::vector<int> k;
  std::vector<int> l;
  std::vector<int> r;
  std::optional<int> axis;
  int cutoff = 30;
  bool weighted = false;
  int workers = 1;
};

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "dcoeff", "omega",  "matrix",   "commutator", "analytic-test", "extract-symbol", "prop4",
      "prop2-classify", "theorem2", "pset", "zeroset", "verify-all"};
  return names;
}

/// Runs one command. The report goes to `--out` (written atomically) or to
/// `out`; failures write a JSON error record to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bergcomm
