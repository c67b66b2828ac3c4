#pragma once

#include <stdexcept>
#include <string>

namespace fosc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index or argument outside the mathematical domain (mode number, position, level).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Array sizes do not match the screen they are used with.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural precondition (e.g. a matrix that is not unitary).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fosc
