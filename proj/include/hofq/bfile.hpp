#pragma once

// OEIS-style b-files: one "index value" line per term, indices 1, 2, 3, ...
// Lines starting with '#' and blank lines are skipped on input and never
// written.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hofq/exact_arith.hpp"

namespace hofq {

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(std::size_t line, const std::string& reason);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

void write_bfile(std::ostream& out, std::span<const Integer> terms);

/// Values in index order. Throws BFileParseError on malformed lines or
/// indices that are not 1, 2, 3, ... in order.
std::vector<Integer> read_bfile(std::istream& in);

}  // namespace hofq
