#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revbcd::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailed = 1,      // verification or validation failure
  kParseError = 2,  // malformed netlist or cost file
  kUsage = 3,
};

// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revbcd::cli
