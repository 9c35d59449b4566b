#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abcvote::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_fail = 1,
  exit_usage = 2,
  exit_parse = 3,
  exit_budget = 4,
};

/// Runs one subcommand (compute, check, find, corpus, reduce, random, oracle).
/// `args` excludes the program name. Results go to `out`, diagnostics to `err`;
/// profile path "-" reads from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace abcvote::cli
