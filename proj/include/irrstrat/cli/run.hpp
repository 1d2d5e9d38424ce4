#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irrstrat::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kMalformed = 1, kPrecondition = 2, kResourceGuard = 3 };

/// Runs one command. `args` excludes the program name; `in` is read when no
/// input file is given. Results and error payloads go to `out` as JSON.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace irrstrat::cli
