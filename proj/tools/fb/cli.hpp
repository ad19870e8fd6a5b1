#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fb::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kCapExceeded = 3,
  kVerifyMismatch = 4,
};

/// Runs the fb command line with args (excluding the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fb::cli
