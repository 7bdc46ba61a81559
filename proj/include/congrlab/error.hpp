#pragma once

#include <stdexcept>
#include <string>

namespace congrlab {

enum class ErrorKind {
  CompositeModulus,
  ExponentOutOfRange,
  DenominatorDivisibleByP,
  NotAUnit,
  MixedModuli,
  NotDivisibleByP,
  DivisionByZero,
  MixedExtension,
  BaseDivisibleByP,
  DivisionFailure,
  IndexOutOfRange,
  NonUnitDenominator,
  PreconditionViolated,
  PrecisionExhausted,
  InvalidArgument,
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorKind::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::MixedModuli: return "MixedModuli";
    case ErrorKind::NotDivisibleByP: return "NotDivisibleByP";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedExtension: return "MixedExtension";
    case ErrorKind::BaseDivisibleByP: return "BaseDivisibleByP";
    case ErrorKind::DivisionFailure: return "DivisionFailure";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonUnitDenominator: return "NonUnitDenominator";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace congrlab
