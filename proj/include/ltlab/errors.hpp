#pragma once

#include <stdexcept>
#include <string>

namespace ltlab {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  NotEisenstein,
  PrecisionExhausted,
  DivisionByIndistinguishableZero,
  HenselCriterionFailed,
  RingMismatch,
  NonzeroConstantTerm,
  NonUnitLinearCoefficient,
  NonUnitConstantTerm,
  NonPositiveValuationPoint,
  NoStabilization,
  IntegralityViolation,
  CongruenceViolation,
  ConvergenceBoundViolation,
  NotInGhostImage,
  IndeterminateValuation,
  RouteMismatch,
  NonzeroRemainder,
  ThresholdTooHigh,
  InvarianceViolation,
  HypothesisViolated,
  ConfigError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::NotEisenstein: return "NotEisenstein";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DivisionByIndistinguishableZero: return "DivisionByIndistinguishableZero";
    case ErrorKind::HenselCriterionFailed: return "HenselCriterionFailed";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::NonUnitLinearCoefficient: return "NonUnitLinearCoefficient";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::NonPositiveValuationPoint: return "NonPositiveValuationPoint";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::CongruenceViolation: return "CongruenceViolation";
    case ErrorKind::ConvergenceBoundViolation: return "ConvergenceBoundViolation";
    case ErrorKind::NotInGhostImage: return "NotInGhostImage";
    case ErrorKind::IndeterminateValuation: return "IndeterminateValuation";
    case ErrorKind::RouteMismatch: return "RouteMismatch";
    case ErrorKind::NonzeroRemainder: return "NonzeroRemainder";
    case ErrorKind::ThresholdTooHigh: return "ThresholdTooHigh";
    case ErrorKind::InvarianceViolation: return "InvarianceViolation";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace ltlab
