#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadgen::cli {

inline constexpr int kFormatVersion = 1;

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,    ///< overflow or any unexpected failure
    kValidation = 2,  ///< bad arguments or violated preconditions
};

/// Runs the command line `args` (without the program name), writing records
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace quadgen::cli
