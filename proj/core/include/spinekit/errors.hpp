#pragma once

#include <stdexcept>
#include <string>

namespace spinekit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based; 0 means no meaningful position.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Structurally invalid object (regularity, dangling references, ranges).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinekit
