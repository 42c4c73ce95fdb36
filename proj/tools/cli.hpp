#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pqtrig::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2 };

/// Runs one command; `args` excludes the program name. Data goes to `out`
/// (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqtrig::cli
