#pragma once

#include <stdexcept>
#include <string>

namespace cuspcount {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A division that the mathematics guarantees to be exact left a remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed JSON or command-line input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A symbolic certificate could not be established.
class CertificateFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace cuspcount
