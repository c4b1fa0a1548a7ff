#ifndef DUALS_CLI_HPP
#define DUALS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace duals::cli {

/// Exit codes: 0 success, 1 usage or parse error, 2 mathematical failure
/// (non-stabilization, rank ambiguity, rejected point).
constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_math = 2;

/// Run one CLI invocation: args as on the command line (without argv[0]),
/// system files read from paths or `in` when the path is "-".  The JSON
/// report goes to `out`, diagnostics to `err`.  Returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace duals::cli

#endif
