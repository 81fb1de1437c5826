#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bsym::cli {

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bsym::cli
