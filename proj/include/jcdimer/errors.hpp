#pragma once

#include <stdexcept>
#include <string>

namespace jcdimer {

// Caller broke a documented precondition (mismatched basis, non-symmetric input, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Physically meaningless input such as a non-positive atom separation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative numerics failed to reach the requested accuracy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jcdimer
