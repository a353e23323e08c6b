#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mfas::cli {

/// Process exit codes shared by every verb.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,     // verify found violations, or bench saw a failing instance
  kNotMFree = 2,
  kParseError = 3,
  kUnsupportedM = 4,
  kTooLarge = 5,
  kUsage = 64,
  kInternal = 70,
};

/// Runs one verb: solve, verify, exact, stats, gen or bench.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfas::cli
