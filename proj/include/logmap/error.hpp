#pragma once

#include <stdexcept>
#include <string>

namespace logmap {

// Modulus is not an odd prime below 2^63.
class InvalidField : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside an operation's domain (non-member seed, even modulus, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameter t lies in {0, +1, -1} (or t^2 does) where the hyperbola map is undefined.
class DegenerateParameter : public DomainError {
 public:
  using DomainError::DomainError;
};

// Orbit search ran out of steps before the first repeat.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace logmap
