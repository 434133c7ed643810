#pragma once

#include <stdexcept>
#include <string>

namespace vmeasure {

/// Numeric codes shared with the C API (see include/vmeasure/vmeasure.h).
enum class ErrorCode : int {
  InvalidArgument = 1,
  Parse = 2,
  Validation = 3,
  NegativeTerm = 4,
  DivergentSeries = 5,
  DimensionMismatch = 6,
  MixedSpace = 7,
  MixedTailRatio = 8,
  TooManyTerms = 9,
  TooLarge = 10,
  NotBochnerIntegrable = 11,
  NotDunford = 12,
  NotPettis = 13,
  NotLocallyDetermined = 14,
  NotLocallyPettis = 15,
  NotLocallyBochner = 16,
  NotInSigmaF = 17,
  NotNuIntegrable = 18,
  Precision = 19,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }

  // Serialized object that exhibits the failure (empty when none applies).
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

template <ErrorCode C>
class CodedError : public Error {
 public:
  explicit CodedError(const std::string& message, std::string witness = {})
      : Error(C, message, std::move(witness)) {}
};

using InvalidArgumentError = CodedError<ErrorCode::InvalidArgument>;
using ParseError = CodedError<ErrorCode::Parse>;
using ValidationError = CodedError<ErrorCode::Validation>;
using NegativeTermError = CodedError<ErrorCode::NegativeTerm>;
using DivergentSeriesError = CodedError<ErrorCode::DivergentSeries>;
using DimensionMismatchError = CodedError<ErrorCode::DimensionMismatch>;
using MixedSpaceError = CodedError<ErrorCode::MixedSpace>;
using MixedTailRatioError = CodedError<ErrorCode::MixedTailRatio>;
using TooManyTermsError = CodedError<ErrorCode::TooManyTerms>;
using TooLargeError = CodedError<ErrorCode::TooLarge>;
using NotBochnerIntegrableError = CodedError<ErrorCode::NotBochnerIntegrable>;
using NotDunfordError = CodedError<ErrorCode::NotDunford>;
using NotPettisError = CodedError<ErrorCode::NotPettis>;
using NotLocallyDeterminedError = CodedError<ErrorCode::NotLocallyDetermined>;
using NotLocallyPettisError = CodedError<ErrorCode::NotLocallyPettis>;
using NotLocallyBochnerError = CodedError<ErrorCode::NotLocallyBochner>;
using NotInSigmaFError = CodedError<ErrorCode::NotInSigmaF>;
using NotNuIntegrableError = CodedError<ErrorCode::NotNuIntegrable>;
using PrecisionError = CodedError<ErrorCode::Precision>;

}  // namespace vmeasure
