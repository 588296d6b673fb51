#pragma once

#include <stdexcept>
#include <string>

namespace spider {

// Malformed textual input; line and column are 0-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line + 1) + ", column " +
                           std::to_string(column + 1) + ")"),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// Boundary or interface mismatch between webs, strings, or slices.
class MismatchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An input violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace spider
