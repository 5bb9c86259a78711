#include "ctcsa/error.hpp"

#include <cstdlib>
#include <string>

#include "ctcsa/caps.hpp"

namespace ctcsa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::NoModulusAvailable: return "NoModulusAvailable";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotCharTwoFinite: return "NotCharTwoFinite";
    case ErrorCode::InfiniteFieldUnsupported: return "InfiniteFieldUnsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NonClosedArithmetic: return "NonClosedArithmetic";
    case ErrorCode::DivisibilityViolated: return "DivisibilityViolated";
    case ErrorCode::ActionNotAutomorphism: return "ActionNotAutomorphism";
    case ErrorCode::ActionNotHomomorphism: return "ActionNotHomomorphism";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NoMatrixLabels: return "NoMatrixLabels";
    case ErrorCode::NotCharTwo: return "NotCharTwo";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotCT: return "NotCT";
    case ErrorCode::IsCSA: return "IsCSA";
    case ErrorCode::NotSolvableCT: return "NotSolvableCT";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::DuplicateBinding: return "DuplicateBinding";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::DepthCapExceeded: return "DepthCapExceeded";
    case ErrorCode::RecipeError: return "RecipeError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

const Caps& default_caps() {
  static const Caps caps = [] {
    Caps c;
    if (const char* env = std::getenv("CTCSA_ORDER_CAP")) {
      try {
        const auto v = std::stoull(env);
        if (v > 0) c.order_cap = v;
      } catch (const std::exception&) {
        // malformed value: keep the built-in cap
      }
    }
    return c;
  }();
  return caps;
}

}  // namespace ctcsa
