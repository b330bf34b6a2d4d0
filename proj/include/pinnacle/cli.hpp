#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pinnacle {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

/// Parses `args` (without the program name) and runs one subcommand:
/// stats, admissible, enumerate, count, orderings, valesets, bench, selftest.
/// Returns 0 on success, 1 on a domain error or failed self-test, 2 on a
/// usage error.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err);

}  // namespace pinnacle
