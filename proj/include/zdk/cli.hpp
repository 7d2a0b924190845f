#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdk {

// Exit codes of the zdk tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,      // usage, I/O and parse errors
  kExitMath = 2,       // MathError
  kExitHeuristic = 3,  // HeuristicExhausted
  kExitBenchFail = 4,  // a bench case disagreed with its expectation
};

// Runs one zdk invocation; args excludes the program name. ZDK_SEED is read
// from the environment when --seed is absent.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdk
