#pragma once

#include <stdexcept>
#include <string>

namespace spo {

enum class ErrorKind {
  NonIrreducibleModulus,
  UnsupportedDegree,
  DivisionByZero,
  DimensionMismatch,
  NotASubspace,
  MissingStructure,
  NotOddHomogeneous,
  NotEven,
  NotAssociative,
  AdSquareMismatch,
  NotAnIdeal,
  InvalidRepresentation,
  RoleMismatch,
  SizeBudgetExceeded,
  NotStrong,
  NoUnit,
  NotPoisson,
  ArityMismatch,
  DifferentialEscapesSubspace,
  NotAHochschildCocycle,
  NotADeformation,
  UnstableTruncation,
  HypothesesFail,
  NotRotaBaxter,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spo
