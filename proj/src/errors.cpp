#include "etalepi/errors.hpp"

namespace etalepi {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::UltrametricViolation: return "ULTRAMETRIC_VIOLATION";
    case ErrorCode::IndistinguishableTruncation: return "INDISTINGUISHABLE_TRUNCATION";
    case ErrorCode::NonIntegralPoint: return "NON_INTEGRAL_POINT";
    case ErrorCode::DuplicatePoint: return "DUPLICATE_POINT";
    case ErrorCode::NotCanonicallyOrdered: return "NOT_CANONICALLY_ORDERED";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::IntervalOutOfRange: return "INTERVAL_OUT_OF_RANGE";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::UnsupportedForm: return "UNSUPPORTED_FORM";
    case ErrorCode::NotAGroup: return "NOT_A_GROUP";
    case ErrorCode::UnknownBuiltin: return "UNKNOWN_BUILTIN";
    case ErrorCode::SizeLimit: return "SIZE_LIMIT";
    case ErrorCode::PrimeToPViolation: return "PRIME_TO_P_VIOLATION";
    case ErrorCode::ParametersTooLarge: return "PARAMETERS_TOO_LARGE";
    case ErrorCode::UnresolvedCrossing: return "UNRESOLVED_CROSSING";
  }
  return "UNKNOWN";
}

}  // namespace etalepi
