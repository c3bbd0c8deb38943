#pragma once

// Command-line front end. Exit codes: 0 success, 1 malformed input or usage,
// 2 violated precondition, 3 inconclusive numeric result.

#include <iosfwd>
#include <string>
#include <vector>

namespace abel::cli {

enum ExitCode : int { ok = 0, parse_error = 1, precondition = 2, inconclusive = 3 };

/// `args` excludes the program name. Input files named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace abel::cli
