#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rockers::cli {

/// Process exit codes. These four values are the whole contract.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kDomainError = 3,
  kPrecisionError = 4,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --out names a file; failures write a single JSON line to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rockers::cli
