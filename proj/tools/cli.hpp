#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shellkit::cli {

enum ExitCode : int {
  kTrue = 0,
  kFalse = 1,
  kInconclusive = 2,
  kUsage = 64,
  kInputFormat = 65,
  kLimitExceeded = 70,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shellkit::cli
