#pragma once

#include <stdexcept>
#include <string>

namespace biq {

/// Raised when an operation is called with arguments violating its contract
/// (mismatched rings, invalid group/torus selectors, malformed input text).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a Groebner computation exceeds its configured resource budget.
/// A limit error never accompanies a partial answer.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when user-supplied geometric parameters are infeasible.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace biq
