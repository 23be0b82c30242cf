#pragma once

#include <stdexcept>
#include <string>

namespace agw {

/// Malformed input text: array literals, rule lines, file headers.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

/// Well-formed input that violates a semantic requirement (unknown
/// membrane, q_f with outgoing transitions, grammar not in normal form...).
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace agw
