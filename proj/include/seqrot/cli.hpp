#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqrot::cli {

/// Exit codes of the rotseq command.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kVerificationFailed = 2,
  kIoError = 3,
};

/// Runs the command line `args` (args[0] is the program name) with the given
/// standard streams and returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace seqrot::cli
