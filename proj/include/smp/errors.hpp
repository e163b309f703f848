#pragma once

#include <stdexcept>
#include <string>

namespace smp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text or structure.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a precondition (unstable assignment,
// out-of-box vector, cap exceeded, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A size or step cap was hit.
class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

// An internal postcondition failed. Never expected on valid input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace smp
