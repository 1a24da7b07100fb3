#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treelasso {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something the operation cannot accept: unknown taxa,
/// malformed files, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; column is 0 when the
/// format is line oriented.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// The distances handed in are not the restriction of a tree metric.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace treelasso
