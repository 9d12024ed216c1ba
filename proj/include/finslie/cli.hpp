#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace finslie::cli {

/// Process exit codes. Every error path has its own code.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kParseError = 3,
  kNormTooLarge = 4,
  kNotDouglas = 5,
  kDegenerateFlag = 6,
  kInvalidMetric = 7,
  kDimensionMismatch = 8,
  kInvalidArgument = 9,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finslie::cli
