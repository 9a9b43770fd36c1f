#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace klein {

enum class ErrorCode {
  ReducibleModulus,
  InvalidField,
  DivisionByZero,
  ArityMismatch,
  DomainMismatch,
  ZeroPolynomial,
  NonInvertibleLeadingCoefficient,
  ParametricCoefficients,
  ExponentOverflow,
  ParseError,
  InfiniteFootprint,
  DuplicateMonomial,
  RankDeficient,
  DimensionTooLarge,
  SupportNotBelowM,
  NotInFootprint,
  UncertifiedLeadingCoefficient,
  InvalidStep,
  UnjustifiedClaim,
  VacuousEverywhere,
  UnsatisfiableLeaf,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying one of the library's error kinds.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace klein
