#ifndef NEARIND_TOOLS_CLI_HPP
#define NEARIND_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nearind/report.hpp"

namespace nearind::cli {

enum ExitCode : int {
    kOk = 0,
    kViolation = 1,
    kUsage = 2,
};

/// Runs the command line `args` (args[0] is the program name). Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Prints a verification report as `table` or `json`; kOk if every check
/// passed, kViolation otherwise.
int emit_report(const Report& report, const std::string& format, std::ostream& out);

}  // namespace nearind::cli

#endif  // NEARIND_TOOLS_CLI_HPP
