#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlocal {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;        // command ran, positive result
inline constexpr int kExitNegative = 1;  // verified negative result
inline constexpr int kExitInput = 2;     // bad arguments or input files
inline constexpr int kExitResource = 3;  // cap exceeded / computation infeasible

// Runs one subcommand; `args` excludes the program name. All output goes to
// the given streams, so tests can drive the CLI in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qlocal
