#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tubings {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitInputError = 2,
    kExitBudget = 3,
};

/// Runs one command line (args excludes the program name).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tubings
