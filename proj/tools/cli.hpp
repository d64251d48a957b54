#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thcover::cli {

enum ExitCode : int {
  kOk = 0,        // any well-formed answer, YES or NO
  kUsage = 2,     // bad flags or arguments
  kInput = 3,     // unreadable or malformed input, input outside an operation's domain
  kInternal = 4,  // a guaranteed property failed (selftest failure included)
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thcover::cli
