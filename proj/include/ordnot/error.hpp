#pragma once

#include <stdexcept>
#include <string>

namespace ordnot {

// Malformed text input (ordinal, term, tree, sequence syntax).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that parses but violates an operation's precondition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search ran past its explicit resource budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what_arg)
      : std::runtime_error("budget exceeded: " + what_arg) {}
};

}  // namespace ordnot
