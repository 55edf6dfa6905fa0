#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace appell::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kMismatch = 3,  // validate ran and found formula/oracle disagreements
};

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace appell::cli
