#pragma once

#include <stdexcept>
#include <string>

namespace modcurve {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InvalidPrime : public Error {
 public:
  using Error::Error;
};

class NotSplit : public Error {
 public:
  using Error::Error;
};

class NonIntegral : public Error {
 public:
  using Error::Error;
};

class NonIntegralWeight : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class ModelMismatch : public Error {
 public:
  using Error::Error;
};

class NotABasis : public Error {
 public:
  using Error::Error;
};

class InvalidPoint : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class UnexpectedVariety : public Error {
 public:
  using Error::Error;
};

class NotAnAutomorphism : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace modcurve
