#pragma once

#include <stdexcept>
#include <string>

namespace cohdeals {

/// Malformed inputs: space mismatches, dimension mismatches, broken invariants.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// Inputs that parse but violate a mathematical precondition of the operation.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical breakdown (solver failure, missing root bracket, quadrature
/// budget exhausted).  Never used to paper over a wrong answer.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cohdeals
