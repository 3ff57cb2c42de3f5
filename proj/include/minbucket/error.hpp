#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minbucket {

/// Invalid model or operation parameters (exponent out of range, empty cap, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Maximum degree violates the truncation regime in strict validation mode.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an operation precondition.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Experiment exceeded its configured memory guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace minbucket
