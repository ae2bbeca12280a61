#ifndef QWOL_ERRORS_HPP
#define QWOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwol {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroPolynomial : public Error {
 public:
  DivisionByZeroPolynomial() : Error("division by the zero polynomial") {}
};

class BothZero : public Error {
 public:
  BothZero() : Error("gcd of two zero polynomials is undefined") {}
};

/// The element shares a nonconstant factor with the modulus.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// An exactness check inside the library failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyRange : public Error {
 public:
  using Error::Error;
};

}  // namespace qwol

#endif  // QWOL_ERRORS_HPP
