#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uxagent::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kUsage = 2,
  kTickLimit = 3,
};

/// Parses and dispatches `uxagent <command> ...`. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uxagent::cli
