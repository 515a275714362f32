#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace biq::cli {

enum ExitCode : int {
  kPass = 0,
  kHlpFail = 1,
  kInvalidInput = 2,
  kResourceLimit = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless `-o` names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biq::cli
