#ifndef HULLKIT_CLI_HPP
#define HULLKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hullkit {

/// Runs one tool invocation. `args` excludes the program name. Reports go
/// to --out when given, otherwise to `out`; diagnostics go to `err`.
/// Exit status: 0 all hard checks pass, 1 a hard check failed (report
/// still written), 2 malformed flags or input, 3 an internal consistency
/// assertion fired.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hullkit

#endif  // HULLKIT_CLI_HPP
