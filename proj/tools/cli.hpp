#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace galorb::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kIncomplete = 2,
  kNumericFailure = 3,
};

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galorb::cli
