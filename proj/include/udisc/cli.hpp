#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace udisc::cli {

// Process exit codes, stable across subcommands.
enum ExitCode : int {
  kOk = 0,
  kFileError = 2,
  kParseError = 3,
  kValidationError = 4,
  kIdentifiabilityError = 5,
  kScaleError = 6,
  kFlagError = 7,
};

// Runs one invocation; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace udisc::cli
