#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permtest {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based; zero means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Arguments that violate a documented precondition (shape, range, domain).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The requested computation would exceed an enumeration cap.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace permtest
