#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bj::cli {

/// Exit codes shared by all subcommands.
enum Exit : int { kOk = 0, kFailed = 1, kBadInput = 2 };

/// Runs one bjtool invocation; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bj::cli
