#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fme {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitResource = 4;

// Runs the command line `args` (args[0] is the program name). Results go to
// out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fme
