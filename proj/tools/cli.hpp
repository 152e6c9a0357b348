#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace patcomp::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kInternalError = 3,
};

/// Runs patc with args (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patcomp::cli
