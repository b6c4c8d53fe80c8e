#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvesing::cli {

enum ExitCode { Ok = 0, Usage = 1, Parse = 2, Verification = 3, Stabilization = 4 };

/// Runs one command line (without the program name); reports go to out,
/// diagnostics to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvesing::cli
