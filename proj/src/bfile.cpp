#include "hofq/bfile.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace hofq {

BFileParseError::BFileParseError(std::size_t line, const std::string& reason)
    : std::runtime_error("b-file line " + std::to_string(line) + ": " + reason), line_(line) {}

void write_bfile(std::ostream& out, std::span<const Integer> terms) {
  std::size_t index = 1;
  for (const auto& value : terms) {
    out << index++ << ' ' << value << '\n';
  }
}

namespace {

bool parse_integer(const std::string& token, Integer& value) {
  if (token.empty()) return false;
  std::size_t digits_from = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (digits_from == token.size()) return false;
  for (std::size_t i = digits_from; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') return false;
  }
  return value.set_str(token[0] == '+' ? token.substr(1) : token, 10) == 0;
}

}  // namespace

std::vector<Integer> read_bfile(std::istream& in) {
  std::vector<Integer> values;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string index_token, value_token, extra;
    fields >> index_token >> value_token;
    if (value_token.empty() || (fields >> extra)) {
      throw BFileParseError(line_number, "expected \"index value\", got \"" + line + "\"");
    }
    Integer index, value;
    if (!parse_integer(index_token, index)) {
      throw BFileParseError(line_number, "bad index \"" + index_token + "\"");
    }
    if (!parse_integer(value_token, value)) {
      throw BFileParseError(line_number, "bad value \"" + value_token + "\"");
    }
    if (index != values.size() + 1) {
      throw BFileParseError(line_number, "index " + index.get_str() + " out of sequence, expected " +
                                             std::to_string(values.size() + 1));
    }
    values.push_back(std::move(value));
  }
  return values;
}

}  // namespace hofq
