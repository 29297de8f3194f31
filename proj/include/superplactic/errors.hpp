#pragma once

#include <stdexcept>
#include <string>

namespace superplactic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: files, tokens, shapes, or fillings that break the
/// tableau conditions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A search or enumeration would exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A checked mathematical invariant failed. Always indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace superplactic
