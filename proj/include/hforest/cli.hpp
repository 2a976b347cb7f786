#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hforest::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
    ok = 0,
    predicate_failed = 1,
    input_error = 2,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hforest::cli
