#include "poslam/error.hpp"

namespace poslam {

namespace {

std::string located(const std::string& message, std::size_t line, std::size_t column,
                    const std::vector<std::string>& expected) {
  std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  if (!expected.empty()) {
    out += "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::string message, std::size_t line, std::size_t column,
                       std::vector<std::string> expected)
    : Error(located(message, line, column, expected)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace poslam
