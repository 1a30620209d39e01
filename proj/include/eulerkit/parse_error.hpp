#pragma once

#include <stdexcept>
#include <string>

namespace eulerkit {

/// Structured parse failure: carries the 1-based line number and the field
/// that failed, so callers can point at the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", " + field + ": " + message),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace eulerkit
