#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fqg {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense row-major complex matrix. Small sizes only (n^2 <= 4096 at the
/// tensor level), so every algorithm here is the plain O(n^3) one.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// u * v^H
  static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  CVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Complex> values);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  CVector apply(std::span<const Complex> v) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);
double max_abs(std::span<const Complex> v);
double norm2(std::span<const Complex> v);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // unitary, eigenvectors as columns
};

inline constexpr double kDefaultHermitianTol = 1e-10;
inline constexpr double kDefaultCutoff = 1e-10;

/// Cyclic Jacobi. Throws NotHermitian when ||A - A*||_F > tol * ||A||_F and
/// NoConvergence when the sweep budget runs out.
HermitianEigen eig_hermitian(const ComplexMatrix& a, double tol = kDefaultHermitianTol);

/// V diag(lambda^s) V*. Eigenvalues in [-tol*scale, 0) are clamped to zero
/// for non-integer s; integer s >= 0 uses the exact power. tol is relative to
/// the largest eigenvalue magnitude.
ComplexMatrix matrix_power(const ComplexMatrix& a, double s, double tol = kDefaultCutoff);

/// Orthogonal projection onto the column space of A, from the spectrum of A A*.
ComplexMatrix range_projection(const ComplexMatrix& a, double tol = kDefaultCutoff);

std::vector<double> singular_values(const ComplexMatrix& a);  // descending
double operator_norm(const ComplexMatrix& a);

/// Gauss-Jordan with partial pivoting; throws Singular.
ComplexMatrix inverse(const ComplexMatrix& a);

/// Householder QR of a tall matrix, reused for many right-hand sides.
class LeastSquares {
 public:
  explicit LeastSquares(const ComplexMatrix& a);

  std::size_t rank() const noexcept { return rank_; }
  bool full_rank() const noexcept { return rank_ == cols_; }

  /// Minimiser of ||A x - b||_2. Requires full column rank.
  CVector solve(std::span<const Complex> b) const;
  /// ||A x - b||_2 for the given x.
  double residual(std::span<const Complex> x, std::span<const Complex> b) const;

 private:
  ComplexMatrix original_;
  ComplexMatrix qr_;  // R in the upper triangle
  std::vector<CVector> reflectors_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t rank_ = 0;
};

}  // namespace fqg
