#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lalg::cli {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. `args` excludes the program name. The report goes to
/// `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lalg::cli
