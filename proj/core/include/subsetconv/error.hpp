#pragma once

#include <stdexcept>
#include <string>

namespace subsetconv {

// Caller passed arguments that violate an operation's precondition.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A size cap (ground set, edge count, oracle guard) was exceeded.
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// CheckedInt arithmetic left the 64-bit range.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

// An integer division that must be exact left a remainder.
class InexactDivision : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Malformed input text. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

}  // namespace subsetconv
