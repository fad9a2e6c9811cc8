#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monosep {

enum class ErrorKind {
  AllZero,
  NonPositive,
  ZeroPolynomial,
  DivisionByZero,
  ConstantTerm,
  InvalidBound,
  InvalidModulus,
  HypothesisUnmet,
  NotMember,
  NotSeparable,
  NotSquarefree,
  UnitInput,
  SyntaxError,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported as this exception;
/// `kind()` identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the 0-based character offset of the offending input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace monosep
