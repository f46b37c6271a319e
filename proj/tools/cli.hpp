#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fano::cli {

// 0 success, 1 usage or configuration, 2 verification or invariant failure,
// 3 I/O or file format.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitFailed = 2,
  kExitIo = 3,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fano::cli
