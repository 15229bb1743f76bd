#pragma once

#include <string>
#include <stdexcept>
#include <string_view>

namespace primroot {

enum class ErrorKind {
  DivisionByZero,
  NegativeSqrt,
  ParseError,
  InvalidN,
  InvalidArgument,
  ZeroTarget,
  NoConvergence,
  AmbiguousMinimizer,
  NoUpperRoot,
  ConstraintViolation,
  DomainViolation,
  NonDescent,
  StepLimit,
  CertificateFailure,
  NotARoot,
  NotPrime,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace primroot
