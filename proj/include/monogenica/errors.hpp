#pragma once

#include <stdexcept>
#include <string>

namespace monogenica {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand lengths disagree with the algebra dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Element with some f_u(a) = 0.
class SingularElement : public Error {
 public:
  using Error::Error;
};

// Resolvent requested at t = xi_u.
class OnSpectrum : public Error {
 public:
  using Error::Error;
};

// Two xi values closer than the separation threshold but not equal.
class CoincidentSpectrum : public Error {
 public:
  using Error::Error;
};

class NotSpecial : public Error {
 public:
  using Error::Error;
};

// Derivative order above the cap, or power series evaluated outside its safe disc.
class HoloDomainError : public Error {
 public:
  using Error::Error;
};

// Spec is structurally fine but fails validation; what() carries the full report.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

// Malformed JSON or missing fields.
class ParseError : public Error {
 public:
  using Error::Error;
};

// File missing, unreadable or unwritable.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace monogenica
