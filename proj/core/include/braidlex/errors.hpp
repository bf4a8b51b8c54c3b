#pragma once

#include <stdexcept>
#include <string>

namespace braidlex {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A letter outside [1, n] or a nonpositive generator count.
class MalformedWord : public Error {
 public:
  using Error::Error;
};

// A segment configuration violating its ordering constraints.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Unparseable diagram or config-spec text.
class ParseError : public Error {
 public:
  using Error::Error;
};

class ForbiddenLetter : public Error {
 public:
  using Error::Error;
};

class ShiftRangeError : public Error {
 public:
  using Error::Error;
};

// Two independently computed objects that must agree did not.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : Error(what), last_residual_(last_residual) {}
  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BoundViolation : public Error {
 public:
  using Error::Error;
};

// Requested automaton exceeds the configured build limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace braidlex
