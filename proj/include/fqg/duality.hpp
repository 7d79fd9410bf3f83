#pragma once

#include <cstdint>
#include <vector>

#include "fqg/quantum_group.hpp"

namespace fqg {

/// GNS data of the Haar state. H_phi is C^n with <x, y> = x^H G y, and
/// Lambda_phi is the identity on coefficient vectors.
struct GnsData {
  ComplexMatrix gram;
  std::vector<ComplexMatrix> left_regular;
};

GnsData gns(const FiniteQuantumGroup& g);

/// T^# = G^{-1} T^H G, the adjoint of T with respect to the Gram form.
ComplexMatrix gram_adjoint(const ComplexMatrix& t, const ComplexMatrix& gram, const ComplexMatrix& gram_inverse);

struct MultiplicativeUnitary {
  ComplexMatrix w;        // n^2 x n^2, acting on H_phi (x) H_phi
  ComplexMatrix w_star;   // Gram adjoint of w
  ComplexMatrix gram;     // G (x) G
  double unitarity_residual = 0.0;
};

/// W^*(x (x) y) = Delta(y)(x (x) 1). Throws AxiomFailure when g fails
/// verify_axioms at 1e-9 and NotUnitary when W deviates from unitarity.
MultiplicativeUnitary build_multiplicative_unitary(const FiniteQuantumGroup& g);

/// W12 W13 W23 - W23 W12, largest entry.
double pentagon_residual(const ComplexMatrix& w, std::size_t n);
/// max over basis x of |Delta(x) - W^*(1 (x) x)W| as operators on H_phi (x) H_phi.
double implementation_residual(const FiniteQuantumGroup& g, const MultiplicativeUnitary& mu);

struct DualPair {
  QuantumGroupPtr base;
  MultiplicativeUnitary unitary;
  ComplexMatrix w_hat;                    // Sigma W^* Sigma
  std::vector<ComplexMatrix> dual_basis;  // D_j = lambda(e_j phi)
  QuantumGroupPtr dual;                   // coordinates w.r.t. dual_basis; haar normalised to a state
  CVector dual_weight;                    // phi-hat, fixed by the Plancherel identity
  double dual_weight_total = 0.0;         // phi-hat(1)
  double plancherel_residual = 0.0;
  double comultiplication_residual = 0.0;  // fit of W-hat^*(1 (x) D)W-hat in span D (x) D
  CVector unit_preimage;                  // z with lambda(z phi) = 1
  ComplexMatrix gram_root;                // G^{1/2}
  ComplexMatrix gram_root_inverse;
};

/// Throws DegenerateDual, PlancherelInconsistent, AxiomFailure.
DualPair build_dual(QuantumGroupPtr g);

/// lambda(x phi) = ((x phi) (x) id)(W) as an operator on H_phi.
ComplexMatrix fourier(const DualPair& dp, const AlgebraElement& x);
/// Same map with the result expressed in dual coordinates (owner dp.dual).
AlgebraElement fourier_element(const DualPair& dp, const AlgebraElement& x);

/// Operator realising a dual element.
ComplexMatrix dual_operator(const DualPair& dp, const AlgebraElement& x);
/// Coordinates of an operator in the dual basis; NotInDual when it lies outside.
AlgebraElement dual_element(const DualPair& dp, const ComplexMatrix& x, double tol = 1e-9);

/// Fourier transform of the dual, X -> lambda-hat(X phi-hat), landing in the base.
AlgebraElement dual_fourier(const DualPair& dp, const ComplexMatrix& x, double tol = 1e-9);
AlgebraElement dual_fourier(const DualPair& dp, const AlgebraElement& x);

/// Range projection of an operator on H_phi, orthogonal for the Gram form.
ComplexMatrix range_projection(const DualPair& dp, const ComplexMatrix& x, double tol = kDefaultCutoff);

/// phi-hat(X) with the Plancherel normalisation (not the normalised state).
Complex dual_weight(const DualPair& dp, const ComplexMatrix& x);

struct PlancherelReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double max_relative_gap = 0.0;
  bool holds = false;
};

/// ||x||_{2,phi} against phi-hat(F(x)^# F(x))^{1/2} on random x.
PlancherelReport plancherel_check(const DualPair& dp, std::size_t samples, std::uint64_t seed, double tol = 1e-9);

struct ConvolutionTheoremReport {
  double residual = 0.0;
  bool holds = false;
};

/// F(x * y) = F(x) F(y).
ConvolutionTheoremReport convolution_theorem_check(const DualPair& dp, const AlgebraElement& x,
                                                   const AlgebraElement& y, double tol = 1e-9);

struct BidualityReport {
  ComplexMatrix identification;  // column j: base coordinates of the j-th basis operator of the bidual
  double residual = 0.0;
  bool holds = false;
};

/// Builds the dual of the dual and matches its structure constants against
/// the base through the operators both realise on H_phi.
BidualityReport biduality_check(const DualPair& dp, double tol = 1e-8);

}  // namespace fqg
