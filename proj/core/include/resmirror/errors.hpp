#pragma once

#include <stdexcept>
#include <string>

namespace resmirror {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: unknown geometry, insertion out of basis, malformed degree.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidDegree : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidInsertion : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidComb : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A denominator factor vanished identically, e.g. after a substitution.
class IdenticallySingular : public Error {
 public:
  using Error::Error;
};

class DuplicatePole : public Error {
 public:
  using Error::Error;
};

class InvalidExp : public Error {
 public:
  using Error::Error;
};

class SingularMetric : public Error {
 public:
  using Error::Error;
};

class CacheCorruption : public Error {
 public:
  using Error::Error;
};

}  // namespace resmirror
