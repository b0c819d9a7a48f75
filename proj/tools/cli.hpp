#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "verify.hpp"

namespace qtsg::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,        // bad flags, unknown names, unparsable input
  kPrecondition = 3  // invalid arguments, capacity limits
};

// Runs one invocation. `args` excludes the program name. Data goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Same, with the reference tables used by `verify` replaced.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const Goldens& goldens);

}  // namespace qtsg::cli
