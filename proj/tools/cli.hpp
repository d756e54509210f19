#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wheel6::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kRange = 3,
  kFormat = 4,
};

// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wheel6::cli
