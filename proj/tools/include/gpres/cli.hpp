#pragma once

// The gpres command line as a library, so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace gpres::cli {

  enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1,  // condition fail, or a certified non-solution
    kUnknown = 2,  // budget exhausted somewhere that mattered
    kUsage   = 3,  // bad flags, bad parameters, unparsable input
  };

  // `args` excludes the program name. Reads GPRES_BUDGET from the
  // environment unless --budget is given.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace gpres::cli
