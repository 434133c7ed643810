#include "core/errors.hpp"

namespace vmeasure {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgumentError";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::NegativeTerm: return "NegativeTermError";
    case ErrorCode::DivergentSeries: return "DivergentSeriesError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatchError";
    case ErrorCode::MixedSpace: return "MixedSpaceError";
    case ErrorCode::MixedTailRatio: return "MixedTailRatioError";
    case ErrorCode::TooManyTerms: return "TooManyTermsError";
    case ErrorCode::TooLarge: return "TooLargeError";
    case ErrorCode::NotBochnerIntegrable: return "NotBochnerIntegrableError";
    case ErrorCode::NotDunford: return "NotDunfordError";
    case ErrorCode::NotPettis: return "NotPettisError";
    case ErrorCode::NotLocallyDetermined: return "NotLocallyDeterminedError";
    case ErrorCode::NotLocallyPettis: return "NotLocallyPettisError";
    case ErrorCode::NotLocallyBochner: return "NotLocallyBochnerError";
    case ErrorCode::NotInSigmaF: return "NotInSigmaFError";
    case ErrorCode::NotNuIntegrable: return "NotNuIntegrableError";
    case ErrorCode::Precision: return "PrecisionError";
  }
  return "UnknownError";
}

}  // namespace vmeasure
