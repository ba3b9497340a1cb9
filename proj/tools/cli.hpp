#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bathlab::cli {

// Exit codes of the bathlab executable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `bathlab` command line. `args` excludes the program name.
/// Results go to `out` (or the file named by --out), diagnostics and the
/// oracle summary to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Number formatting shared by every subcommand: 9 significant digits,
// scientific notation.
std::string format_number(double value);

}  // namespace bathlab::cli
