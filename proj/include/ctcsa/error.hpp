#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctcsa {

enum class ErrorCode {
  // exact fields
  NonPrime,
  FieldTooLarge,
  NoModulusAvailable,
  SpecMismatch,
  DivisionByZero,
  NotCharTwoFinite,
  InfiniteFieldUnsupported,
  ParseError,
  // groups
  OrderCapExceeded,
  NonClosedArithmetic,
  DivisibilityViolated,
  ActionNotAutomorphism,
  ActionNotHomomorphism,
  NotSubgroup,
  InvalidArgument,
  // matrix groups
  NoMatrixLabels,
  NotCharTwo,
  NotNormal,
  PreconditionFailed,
  // deciders
  NotCT,
  IsCSA,
  NotSolvableCT,
  // logic
  SyntaxError,
  UnboundVariable,
  DuplicateBinding,
  UnknownBuiltin,
  DepthCapExceeded,
  // harness
  RecipeError,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown by the parsers; carries the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, "at offset " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ctcsa
