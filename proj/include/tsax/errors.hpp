#pragma once

#include <stdexcept>
#include <string>

namespace tsax {

// Bad data: empty series, non-finite values, empty reference sets.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Out-of-range parameter: alphabet size, segment count, generator sizes.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two representations (or a representation and a table) that cannot be compared.
class IncompatibleRepresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structurally malformed input file (ragged rows, bad cache header).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A field that could not be read as a number.
class ParseError : public FormatError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : FormatError(what + " (line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tsax
