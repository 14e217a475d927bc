#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equispec {

enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 2,
    kExitNegative = 3,
};

/// Runs the command line (args excludes the program name). `in` backs the "-" file name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace equispec
