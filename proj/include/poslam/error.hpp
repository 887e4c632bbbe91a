#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace poslam {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad concrete syntax. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column,
             std::vector<std::string> expected);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

// An operation was called outside its domain (non-value substituted, path
// under an abstraction, non-positive term handed to a positive engine, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A redex no longer matches the term it is applied to.
class StaleRedexError : public Error {
 public:
  using Error::Error;
};

// A constructive meta-theory transform could not complete. Always an engine
// or translation bug, never a user error.
class HarnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace poslam
