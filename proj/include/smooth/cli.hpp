#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace smooth {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInvalidBasis = 2,
  kExitParseError = 3,
  kExitNumericFailure = 4,
};

// args excludes the program name. stdout carries data only; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smooth
