#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace etalepi {

/// Stable error codes surfaced by every module and by the CLI.
enum class ErrorCode {
  InvalidInput,
  UltrametricViolation,
  IndistinguishableTruncation,
  NonIntegralPoint,
  DuplicatePoint,
  NotCanonicallyOrdered,
  IndexOutOfRange,
  IntervalOutOfRange,
  DimensionMismatch,
  UnsupportedForm,
  NotAGroup,
  UnknownBuiltin,
  SizeLimit,
  PrimeToPViolation,
  ParametersTooLarge,
  UnresolvedCrossing,
};

/// Upper-snake name used in machine-readable error output,
/// e.g. ULTRAMETRIC_VIOLATION.
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace etalepi
