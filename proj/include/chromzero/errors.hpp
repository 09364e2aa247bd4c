#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromzero {

/// Malformed graph text. Carries the 1-based line number of the offending line
/// (0 when the problem is not tied to a single line, e.g. a missing edge).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive routine was asked to run beyond its configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chromzero
