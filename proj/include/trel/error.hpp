#pragma once

#include <stdexcept>

namespace trel {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An assignment does not cover a variable the formula needs.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied argument violates a precondition (set not a subset,
// empty set, malformed identifier, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// An enumeration cap or the tableau node budget would be exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace trel
