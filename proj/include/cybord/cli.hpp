#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cybord::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; ks subcommands read `in` when no --input is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace cybord::cli
