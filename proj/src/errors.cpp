#include "primroot/errors.hpp"

namespace primroot {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NegativeSqrt: return "NegativeSqrt";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidN: return "InvalidN";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroTarget: return "ZeroTarget";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::AmbiguousMinimizer: return "AmbiguousMinimizer";
    case ErrorKind::NoUpperRoot: return "NoUpperRoot";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::NonDescent: return "NonDescent";
    case ErrorKind::StepLimit: return "StepLimit";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NotPrime: return "NotPrime";
  }
  return "Unknown";
}

}  // namespace primroot
