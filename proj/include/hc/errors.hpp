#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hc {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  InvalidDescriptor,
  InternalInvariantViolation,
  DimensionMismatch,
  Singular,
  NotHermitian,
  NotSymmetric,
  RankNotDivisible,
  NilOrdering,
  ZeroArgument,
  OrderingNotInXTilde,
  InvalidOrdering,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// front ends can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::RankNotDivisible: return "RankNotDivisible";
    case ErrorCode::NilOrdering: return "NilOrdering";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::OrderingNotInXTilde: return "OrderingNotInXTilde";
    case ErrorCode::InvalidOrdering: return "InvalidOrdering";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hc
