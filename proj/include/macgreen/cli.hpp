#ifndef MACGREEN_CLI_HPP
#define MACGREEN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace macgreen {

/// Runs the command-line interface on the given arguments (program name
/// excluded). Returns the process exit code: 0 for decided verdicts and
/// successful reports, 2 for Inconclusive/Unknown, 1 for input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace macgreen

#endif  // MACGREEN_CLI_HPP
