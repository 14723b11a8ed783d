#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quandle::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // invalid input, failed verification, not isomorphic
  kUsage = 2,
  kResourceCap = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace quandle::cli
