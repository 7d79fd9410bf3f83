#pragma once

#include <limits>
#include <vector>

#include "fqg/duality.hpp"
#include "fqg/quantum_group.hpp"

namespace fqg {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
/// Relative slack for every inequality check.
inline constexpr double kInequalitySlack = 1e-9;

/// p' with 1/p + 1/p' = 1, 1' = inf, inf' = 1. Throws BadExponents for p < 1.
double conjugate_exponent(double p);
/// r with 1/r = 1/p + 1/q - 1; BadExponents when that lies outside [0, 1].
double young_exponent(double p, double q);

/// Singular values of x in the GNS representation of the weight with the
/// weight of each spectral projection of |x|, enough to
/// evaluate ||x||_p for every p without another eigendecomposition.
struct LpSpectrum {
  std::vector<double> singular_values;  // of x in the GNS representation
  std::vector<double> weights;      // weight of each spectral projection
  double norm(double p) const;
};

/// L^p(owner, weight) for a faithful tracial positive functional.
class WeightedLpSpace {
 public:
  /// Throws NotTracial when weight(xy) != weight(yx) beyond 1e-9 (relative),
  /// NotPositive when the weight is not faithful and positive.
  WeightedLpSpace(QuantumGroupPtr owner, CVector weight);

  static WeightedLpSpace base(QuantumGroupPtr g);
  /// L^p of the dual with the Plancherel-normalised weight phi-hat.
  static WeightedLpSpace dual(const DualPair& dp);

  const QuantumGroupPtr& owner() const noexcept { return owner_; }
  const CVector& weight() const noexcept { return weight_; }
  Complex apply_weight(std::span<const Complex> x) const;

  LpSpectrum spectrum(const AlgebraElement& x) const;
  double norm(const AlgebraElement& x, double p) const { return spectrum(x).norm(p); }

 private:
  QuantumGroupPtr owner_;
  CVector weight_;
  ComplexMatrix root_;          // G_w^{1/2}
  ComplexMatrix root_inverse_;  // G_w^{-1/2}
  CVector root_unit_;           // G_w^{1/2} 1
  CVector weight_root_inverse_; // w G_w^{-1/2}
};

double lp_norm(const AlgebraElement& x, double p, const WeightedLpSpace& space);

/// x * y = ((x phi) R (x) id) Delta(y).
AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y);

/// Density functional x phi = (phi(e_k x))_k.
CVector density_functional(const AlgebraElement& x);
/// Inverse of density_functional.
AlgebraElement density(QuantumGroupPtr g, std::span<const Complex> functional);
/// (omega * theta)_k = (omega (x) theta) Delta(e_k).
CVector convolve_functional_form(const FiniteQuantumGroup& g, std::span<const Complex> omega,
                                 std::span<const Complex> theta);
/// (id (x) omega R) Delta(x); the delta-twisted form with delta = 1.
AlgebraElement delta_twisted_convolve(const AlgebraElement& x, std::span<const Complex> omega);

struct InequalityReport {
  double p = 1.0;
  double q = 1.0;
  double r = 1.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs, 0 when both vanish
  bool holds = false;
};

InequalityReport make_inequality_report(double lhs, double rhs, double p, double q, double r);

/// ||x * y||_r <= ||x||_p ||y||_q.
InequalityReport young_check(const WeightedLpSpace& space, const AlgebraElement& x, const AlgebraElement& y,
                             double p, double q);
InequalityReport young_check(const AlgebraElement& x, const AlgebraElement& y, double p, double q);
/// ||x * y||_p <= ||x||_1 ||y||_p, p in [1, inf].
InequalityReport young_l1_lp_check(const AlgebraElement& x, const AlgebraElement& y, double p);

/// ||F(x)||_{p', phi-hat} <= ||x||_{p, phi}, p in [1, 2].
InequalityReport hausdorff_young_check(const DualPair& dp, const WeightedLpSpace& base_space,
                                       const WeightedLpSpace& dual_space, const AlgebraElement& x, double p);
InequalityReport hausdorff_young_check(const DualPair& dp, const AlgebraElement& x, double p);

/// ||x||_{p, phi} against ||alpha(x)||_{p, phi alpha^{-1}}; holds means equal within 1e-9.
InequalityReport norm_transport_check(const ComplexMatrix& alpha, const AlgebraElement& x, double p);

}  // namespace fqg
