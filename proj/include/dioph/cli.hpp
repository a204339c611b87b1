#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dioph {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailed = 1,  // verification failed or a mathematical precondition does not hold
    kExitUsage = 2,   // bad flags or malformed numbers
};

// Runs the command line; args[0] is the program name. Data records go to
// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dioph
