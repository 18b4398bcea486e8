#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qinv
{

/// Process exit statuses of the command-line tool.
enum ExitCode : int
{
    kExitOk = 0,
    kExitComputation = 1,
    kExitInput = 2,
    kExitResource = 3,
};

/**
 * Runs one command. `args` excludes the program name. The last line written
 * to `out` on success is `RESULT <command> <value>`; diagnostics go to `err`.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qinv
