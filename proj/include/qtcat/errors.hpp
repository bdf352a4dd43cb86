#pragma once

#include <stdexcept>
#include <string>

namespace qtcat {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero rational function") {}
};

// An exact division left a nonzero remainder.
class NotPolynomial : public Error {
 public:
  using Error::Error;
};

class InvalidWord : public Error {
 public:
  using Error::Error;
};

class InvalidChainMap : public Error {
 public:
  using Error::Error;
};

class NoSuchBijection : public Error {
 public:
  using Error::Error;
};

class MidlineViolation : public Error {
 public:
  using Error::Error;
};

class NotInDomain : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class WrongPart : public Error {
 public:
  using Error::Error;
};

class CaseMismatch : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; always a bug, never bad input.
class InternalCheckFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace qtcat
