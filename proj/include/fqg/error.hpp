#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqg {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  NotPositive,
  Singular,
  ShapeMismatch,
  NotAGroup,
  OwnerMismatch,
  AxiomFailure,
  NotUnitary,
  DegenerateDual,
  PlancherelInconsistent,
  NotInDual,
  NotTracial,
  BadExponents,
  NotAutomorphism,
  NotGroupLike,
  NotProjection,
  NotAShift,
  CertificateMissing,
  NotABishift,
  UnknownExample,
  EvalAtForbiddenMu,
  BadParameters,
  BadFlags,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code logic) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fqg
