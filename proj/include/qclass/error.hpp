#pragma once

#include <stdexcept>
#include <string>

namespace qclass {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Labels or operations were combined across incompatible fusion families.
class WrongFamilyError : public Error {
 public:
  using Error::Error;
};

// A decay constant was requested for a family with A_1 <= 1.
class KacOrInvalidError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A size, term or precision budget was exhausted.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace qclass
