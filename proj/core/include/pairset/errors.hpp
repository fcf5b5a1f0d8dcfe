#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pairset {

/// Input outside an operation's domain (bad uniformity, m <= r, f > C(m,r), ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Checked integer arithmetic overflowed. Never wrapped.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// An exhaustive computation would exceed its configured budget. Raised
/// instead of sampling or truncating.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed hypergraph text. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A construction cannot meet its postcondition with the resources given.
class InfeasibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace pairset
