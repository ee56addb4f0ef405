#pragma once

#include <stdexcept>
#include <string>

namespace gelgamal {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a precondition: mixed moduli, mismatched dimensions, bad parameters.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Zero has no multiplicative inverse.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// e.g. asking for more distinct nonzero residues than the field has.
class ImpossibleRequest : public Error {
 public:
  using Error::Error;
};

/// A value does not fit the native 64-bit range an operation is restricted to.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// The element is not in the group whose exponent was used for an order computation.
class NotInGroup : public Error {
 public:
  using Error::Error;
};

/// Protocol step called out of order, or a peer sent an unusable token.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

class MalformedCiphertext : public Error {
 public:
  using Error::Error;
};

}  // namespace gelgamal
