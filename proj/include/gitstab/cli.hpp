#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gitstab/families.hpp"

namespace gitstab::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kHarnessFailure = 1,
  kInvalidInput = 2,
  kInternalError = 3,
};

/// Runs the tool on `args` (without the program name). Text goes to `out`;
/// structured error reports go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1->2,1->2" with 1-indexed vertices.
std::vector<Arrow> parse_arrows(const std::string& text);
/// Comma-separated integers.
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace gitstab::cli
