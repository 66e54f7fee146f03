#pragma once

#include <stdexcept>
#include <string>

namespace cubicfrac {

// Raised when an argument violates a mathematical precondition (perfect cube
// radicand, division by zero, mismatched fields, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised for malformed textual input such as "3/0" or "x/2".
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cubicfrac
