#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixvol {

/// Violated precondition or unsatisfiable request on otherwise valid input.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request outside the supported envelope (e.g. ambient dimension above 6).
class CapabilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed textual input. Line and column are 1-based.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : DomainError(what + " at line " + std::to_string(line) + ", column " +
                    std::to_string(column)),
        reason_(what),
        line_(line),
        column_(column) {}

  /// The message without its position suffix.
  const std::string& reason() const noexcept { return reason_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mixvol
