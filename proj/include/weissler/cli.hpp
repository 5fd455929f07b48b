#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weissler {

enum ExitCode : int { kExitHolds = 0, kExitViolation = 1, kExitInputError = 2, kExitNumericalError = 3 };

// Entry point of the weissler_lab tool.  args excludes the program name.
// The report goes to out (or to --out), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weissler
