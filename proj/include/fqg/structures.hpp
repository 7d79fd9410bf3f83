#pragma once

#include <string>
#include <vector>

#include "fqg/duality.hpp"
#include "fqg/quantum_group.hpp"
#include "fqg/report.hpp"

namespace fqg {

inline constexpr double kCertificateTol = 1e-9;

struct GroupLikeCertificate {
  AlgebraElement element;
  CheckList residuals;  // self_adjoint, idempotent, nonzero, defining_relation
  bool certified = false;
};

/// h = h^* = h^2, h != 0 and Delta(h)(1 (x) h) = h (x) h. Works in any
/// finite quantum group, including a dual.
GroupLikeCertificate is_group_like_projection(const AlgebraElement& h, double tol = kCertificateTol);

/// S(h) = h, R(h) = h, Delta(h)(h (x) 1) = h (x) h, h phi = h psi and the
/// (vacuous) modular invariance. Throws NotGroupLike.
CheckList verify_glp_properties(const AlgebraElement& h, double tol = kCertificateTol);

struct BiprojectionReport {
  bool is_projection = false;
  double multiple = 0.0;         // c with F(h) = c P
  double projection_residual = 0.0;
  bool biprojection = false;
};

/// h a projection whose Fourier transform is a multiple of a projection.
BiprojectionReport is_biprojection(const DualPair& dp, const AlgebraElement& h, double tol = kCertificateTol);

/// phi(h)^{-1} F(h) group-like in the dual, phi(h) phi-hat(range F(h)) = 1 and
/// F-hat(range F(h)) = phi(h)^{-1} h. Throws NotGroupLike.
CheckList glpbi_check(const DualPair& dp, const AlgebraElement& h, double tol = kCertificateTol);

struct EquivalenceEntry {
  AlgebraElement candidate;
  bool group_like = false;
  bool biprojection = false;
};

struct EquivalenceReport {
  std::vector<EquivalenceEntry> entries;
  std::size_t rejected_non_projections = 0;
  std::vector<std::size_t> disagreements;  // indices into entries
  bool holds() const { return disagreements.empty(); }
};

/// Biprojection iff group-like, over every candidate that is a nonzero projection.
EquivalenceReport biprojection_iff_grouplike(const DualPair& dp, const std::vector<AlgebraElement>& candidates,
                                             double tol = kCertificateTol);

enum class Side { Left, Right };
std::string_view to_string(Side side);

struct ShiftCertificate {
  AlgebraElement x;
  AlgebraElement h;
  Side side = Side::Left;
  double mu = 1.0;
  CheckList checks;
  bool certified = false;
};

/// Left: Delta(x)(1 (x) h) = x (x) h, Delta(h)(1 (x) x) = R(x) (x) x, phi(x) = phi(h).
/// Right: Delta(x)(h (x) 1) = h (x) x, Delta(h)(x (x) 1) = x (x) R(x), psi(x) = psi(h).
/// Throws NotGroupLike / NotProjection on bad inputs.
ShiftCertificate shift_check(const AlgebraElement& x, const AlgebraElement& h, Side side,
                             double tol = kCertificateTol);

/// Singular values of x in the GNS frame lie in {0, s}; returns s (0 if x = 0) and the spread.
struct PartialIsometryFit {
  double s = 0.0;
  double spread = 0.0;
  bool holds = false;
};
PartialIsometryFit multiple_of_partial_isometry(const ComplexMatrix& orthonormal_frame_operator);
PartialIsometryFit element_partial_isometry(const DualPair& dp, const AlgebraElement& x);
PartialIsometryFit operator_partial_isometry(const DualPair& dp, const ComplexMatrix& op);

/// Operator norm on H_phi (Gram form).
double hilbert_operator_norm(const DualPair& dp, const ComplexMatrix& op);

/// x and F(x) multiples of partial isometries, F(x)^# F(x) = phi(h) F(h),
/// ||F(x)||_inf = phi(h). Throws NotAShift when x is not a certified left shift of h.
CheckList bipartial_isometry_check(const DualPair& dp, const AlgebraElement& x, const AlgebraElement& h,
                                   double tol = kCertificateTol);

struct BishiftContext {
  AlgebraElement h;        // group-like in the base
  AlgebraElement x_h;      // left shift of h
  AlgebraElement y;
  AlgebraElement h_tilde;  // range projection of F(h), in the dual
  AlgebraElement x_tilde;  // left shift of h_tilde in the dual
};

/// (x_h y) * F-hat(x_tilde). Throws CertificateMissing when either shift fails.
AlgebraElement bishift_construct(const DualPair& dp, const BishiftContext& context, double tol = kCertificateTol);

/// Partial-isometry structure of x and F(x), ||F(x)||_inf = ||x||_1 and
/// ||F(x)||_{p'} = ||x||_p for p in {1, 4/3, 2}. Throws NotABishift when x = 0.
CheckList bishift_theorem_check(const DualPair& dp, const AlgebraElement& x, double tol = kCertificateTol);

/// Group-like projections of a catalog example: complete for function and group
/// algebras (subgroups), certified candidates only for Kac-Paljutkin.
std::vector<AlgebraElement> enumerate_group_like_projections(const QuantumGroupPtr& g);

/// Minimal spectral projections of a self-adjoint element (as elements).
std::vector<AlgebraElement> spectral_projections(const AlgebraElement& a, double tol = 1e-8);

/// Every sum of minimal spectral projections, over several commuting families;
/// for function algebras this is every projection.
std::vector<AlgebraElement> projection_candidates(const QuantumGroupPtr& g, std::uint64_t seed = 1);

/// Left shifts of h found among the given projections.
std::vector<AlgebraElement> certified_left_shifts(const AlgebraElement& h, const std::vector<AlgebraElement>& pool,
                                                  double tol = kCertificateTol);

}  // namespace fqg
