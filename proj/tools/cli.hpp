#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invol::cli {

enum ExitCode { kPass = 0, kVerificationFailure = 1, kUsageError = 2, kOracleInfeasible = 3 };

/// Parses args (without the program name), runs the command and writes the
/// report to out. Diagnostics go to err. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invol::cli
