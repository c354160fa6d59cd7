#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starconf::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { ok = 0, check_failed = 1, usage = 2, resource = 3 };

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Cap defaults come from the STARCONF_* environment
/// variables and are overridden by flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starconf::cli
