#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fqg/matrix.hpp"

namespace fqg {

/// Raw structure constants of a finite-dimensional Hopf *-algebra over a basis
/// e_0..e_{n-1}. Tensors e_i (x) e_j are indexed i*n + j.
struct QuantumGroupData {
  std::string name;
  std::size_t dim = 0;
  std::vector<Complex> mult;    // mult[(i*n + j)*n + k]: e_i e_j = sum_k mult * e_k
  CVector unit;                 // coefficients of 1
  ComplexMatrix comult;         // n^2 x n, column k = Delta(e_k)
  CVector counit;               // epsilon(e_k)
  ComplexMatrix antipode;       // column k = S(e_k)
  ComplexMatrix star;           // x* = star * conj(x)
  CVector haar;                 // phi(e_k)
  ComplexMatrix unitary_antipode;  // column k = R(e_k)
};

/// Immutable finite quantum group. The Haar state is both left and right
/// invariant here, so one functional serves as phi and psi.
class FiniteQuantumGroup {
 public:
  /// Throws ShapeMismatch when the tensors do not match dim.
  explicit FiniteQuantumGroup(QuantumGroupData data);

  const QuantumGroupData& data() const noexcept { return data_; }
  const std::string& name() const noexcept { return data_.name; }
  std::size_t dim() const noexcept { return data_.dim; }

  CVector basis(std::size_t i) const;
  const CVector& unit() const noexcept { return data_.unit; }

  CVector multiply(std::span<const Complex> x, std::span<const Complex> y) const;
  CVector star(std::span<const Complex> x) const;
  CVector comultiply(std::span<const Complex> x) const;
  Complex counit(std::span<const Complex> x) const;
  CVector antipode(std::span<const Complex> x) const;
  CVector unitary_antipode(std::span<const Complex> x) const;
  Complex haar(std::span<const Complex> x) const;
  Complex apply_functional(std::span<const Complex> functional, std::span<const Complex> x) const;

  /// Matrix of y -> x y in the basis.
  const ComplexMatrix& left_regular(std::size_t i) const { return left_regular_[i]; }
  ComplexMatrix left_regular(std::span<const Complex> x) const;

  /// Products and involution on A (x) A, coefficient vectors of length n^2.
  CVector tensor(std::span<const Complex> x, std::span<const Complex> y) const;
  CVector tensor_multiply(std::span<const Complex> t, std::span<const Complex> u) const;
  CVector tensor_star(std::span<const Complex> t) const;

  /// G_ij = phi(e_i* e_j).
  ComplexMatrix gram() const;

  bool is_commutative(double tol = 1e-12) const;
  bool is_cocommutative(double tol = 1e-12) const;

 private:
  QuantumGroupData data_;
  std::vector<ComplexMatrix> left_regular_;
};

using QuantumGroupPtr = std::shared_ptr<const FiniteQuantumGroup>;

/// Coefficient vector tied to the quantum group it lives in. Arithmetic
/// between elements of different owners throws OwnerMismatch.
class AlgebraElement {
 public:
  AlgebraElement(QuantumGroupPtr owner, CVector coeffs);
  static AlgebraElement zero(QuantumGroupPtr owner);
  static AlgebraElement one(QuantumGroupPtr owner);
  static AlgebraElement basis(QuantumGroupPtr owner, std::size_t i);

  const QuantumGroupPtr& owner() const noexcept { return owner_; }
  const CVector& coeffs() const noexcept { return coeffs_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }

  AlgebraElement star() const;
  AlgebraElement antipode() const;
  AlgebraElement unitary_antipode() const;
  Complex haar() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(Complex s);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, Complex s) { return a *= s; }
  friend AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }
  /// Algebra product.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

 private:
  QuantumGroupPtr owner_;
  CVector coeffs_;
};

void require_same_owner(const AlgebraElement& a, const AlgebraElement& b);
void require_owner(const AlgebraElement& a, const QuantumGroupPtr& owner);

double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b);

struct AxiomResidual {
  std::string name;
  double residual = 0.0;
};

struct AxiomReport {
  std::string example;
  double tol = 0.0;
  std::vector<AxiomResidual> axioms;
  double gram_min_eigenvalue = 0.0;
  bool passes = false;

  double residual(std::string_view name) const;
  double max_residual() const;
};

/// Checks every Hopf *-algebra, Haar and Kac-type axiom and records the
/// largest coefficient residual of each.
AxiomReport verify_axioms(const FiniteQuantumGroup& g, double tol);

/// Automorphism given by its matrix (column j = alpha(e_j)).
AlgebraElement apply_automorphism(const ComplexMatrix& alpha, const AlgebraElement& x);
bool is_automorphism(const FiniteQuantumGroup& g, const ComplexMatrix& alpha, double tol);

}  // namespace fqg
