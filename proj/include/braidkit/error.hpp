#pragma once

#include <stdexcept>
#include <string>

namespace braidkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in Q(zeta_n)") {}
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix entry connects basis vectors of different degree.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Composition or tensoring of morphisms whose spaces do not line up.
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
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

/// A construction refused its input. `where` names the failed condition,
/// `witness` the first offending basis element if any.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::string where_, std::string witness_ = {})
      : Error(what), where(std::move(where_)), witness(std::move(witness_)) {}
  std::string where;
  std::string witness;
};

}  // namespace braidkit
