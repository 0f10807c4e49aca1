#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tam::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kFail = 2,
  kInconclusive = 3,
};

// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tam::cli
