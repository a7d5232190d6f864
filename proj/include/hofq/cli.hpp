#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hofq/exact_arith.hpp"

namespace hofq::cli {

/// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsage = 2,
  kNotFound = 3,
  kUnderflow = 4,
  kForwardReference = 5,
};

/// "1,2,-3" -> {1, 2, -3}. Throws std::invalid_argument.
std::vector<Integer> parse_integer_list(const std::string& text);

/// Runs the command line `args` (args[0] is the program name). `in` backs
/// "--input -"; records go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hofq::cli
