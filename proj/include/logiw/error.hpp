#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logiw {

enum class ErrorCode {
  InvalidArgument,
  EvenPrime,
  NonUnit,
  ZeroArgument,
  DegenerateAtPrecision,
  DegreeOverflow,
  ZeroSeries,
  PrecisionExhausted,
  SingularPresentation,
  InfiniteQuotient,
  PrecisionSaturated,
  InconsistentSequence,
  NegativeLambda,
  NotSquarefree,
  PositiveD,
  SizeLimit,
  ParseError,
  InvalidGroupShape,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::EvenPrime: return "EvenPrime";
  case ErrorCode::NonUnit: return "NonUnit";
  case ErrorCode::ZeroArgument: return "ZeroArgument";
  case ErrorCode::DegenerateAtPrecision: return "DegenerateAtPrecision";
  case ErrorCode::DegreeOverflow: return "DegreeOverflow";
  case ErrorCode::ZeroSeries: return "ZeroSeries";
  case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
  case ErrorCode::SingularPresentation: return "SingularPresentation";
  case ErrorCode::InfiniteQuotient: return "InfiniteQuotient";
  case ErrorCode::PrecisionSaturated: return "PrecisionSaturated";
  case ErrorCode::InconsistentSequence: return "InconsistentSequence";
  case ErrorCode::NegativeLambda: return "NegativeLambda";
  case ErrorCode::NotSquarefree: return "NotSquarefree";
  case ErrorCode::PositiveD: return "PositiveD";
  case ErrorCode::SizeLimit: return "SizeLimit";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::InvalidGroupShape: return "InvalidGroupShape";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

} // namespace logiw
