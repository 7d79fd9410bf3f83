#include "fqg/error.hpp"

namespace fqg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::OwnerMismatch: return "OwnerMismatch";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::DegenerateDual: return "DegenerateDual";
    case ErrorKind::PlancherelInconsistent: return "PlancherelInconsistent";
    case ErrorKind::NotInDual: return "NotInDual";
    case ErrorKind::NotTracial: return "NotTracial";
    case ErrorKind::BadExponents: return "BadExponents";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotGroupLike: return "NotGroupLike";
    case ErrorKind::NotProjection: return "NotProjection";
    case ErrorKind::NotAShift: return "NotAShift";
    case ErrorKind::CertificateMissing: return "CertificateMissing";
    case ErrorKind::NotABishift: return "NotABishift";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::EvalAtForbiddenMu: return "EvalAtForbiddenMu";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::BadFlags: return "BadFlags";
  }
  return "Unknown";
}

}  // namespace fqg
