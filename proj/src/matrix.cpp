#include "fqg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fqg/error.hpp"

namespace fqg {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": shapes differ");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::ShapeMismatch, "entry count does not match rows*cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

CVector ComplexMatrix::column(std::size_t c) const {
  CVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const Complex> values) {
  if (values.size() != rows_) throw Error(ErrorKind::ShapeMismatch, "set_column length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const { return norm2(entries_); }

double ComplexMatrix::max_abs() const { return fqg::max_abs(entries_); }

CVector ComplexMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "apply: vector length");
  CVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc = 0.0;
    const Complex* row = &entries_[r * cols_];
    for (std::size_t c = 0; c < cols_; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "operator*: inner dimensions");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Complex* orow = &out.entries_[i * out.cols_];
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a.entries_[i * a.cols_ + k];
      if (aik == Complex{}) continue;
      const Complex* brow = &b.entries_[k * b.cols_];
      for (std::size_t j = 0; j < b.cols_; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  return max_abs_diff(a.entries(), b.entries());
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "max_abs_diff: lengths");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

HermitianEigen eig_hermitian(const ComplexMatrix& input, double tol) {
  if (!input.is_square()) throw Error(ErrorKind::ShapeMismatch, "eig_hermitian: not square");
  const std::size_t n = input.rows();
  const double scale = input.frobenius_norm();
  const ComplexMatrix adj = input.adjoint();
  double asym = 0.0;
  for (std::size_t i = 0; i < input.entries().size(); ++i)
    asym += std::norm(input.entries()[i] - adj.entries()[i]);
  if (std::sqrt(asym) > tol * std::max(scale, 1e-300)) {
    throw Error(ErrorKind::NotHermitian, "asymmetry exceeds tolerance");
  }

  ComplexMatrix a = input + adj;
  a *= 0.5;
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  const double target = 1e-15 * std::max(scale, 1e-300);
  double off = off_norm();
  for (int sweep = 0; sweep < kMaxSweeps && off > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-300) continue;
        const Complex phase = a(p, q) / mag;  // e^{i theta}
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U on (p,q): [[c, s], [-s e^{-i theta}, c e^{-i theta}]]
        const Complex upp = c, upq = s;
        const Complex uqp = -s * std::conj(phase), uqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {  // A <- A U
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- U^H A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
    const double next = off_norm();
    const bool stalled = next >= 0.5 * off;
    off = next;
    if (stalled && off <= 1e-13 * std::max(scale, 1e-300)) break;
  }
  if (off > 1e-13 * std::max(scale, 1e-300)) {
    throw Error(ErrorKind::NoConvergence, "Jacobi sweep budget exhausted");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

namespace {

ComplexMatrix spectral_synthesis(const HermitianEigen& eig, const std::vector<double>& f) {
  const std::size_t n = eig.values.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (f[k] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k) * f[k];
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

double spectral_scale(const std::vector<double>& values) {
  double m = 0.0;
  for (double x : values) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

ComplexMatrix matrix_power(const ComplexMatrix& a, double s, double tol) {
  const HermitianEigen eig = eig_hermitian(a);
  const double scale = spectral_scale(eig.values);
  const double cutoff = tol * scale;
  const bool integral = s >= 0 && std::floor(s) == s;
  std::vector<double> f(eig.values.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    double lambda = eig.values[k];
    if (integral) {
      f[k] = std::pow(lambda, s);
      continue;
    }
    if (lambda < -cutoff) throw Error(ErrorKind::NotPositive, "negative eigenvalue under fractional power");
    if (s < 0 && lambda < cutoff) throw Error(ErrorKind::Singular, "negative power of a singular matrix");
    lambda = std::max(lambda, 0.0);
    f[k] = lambda == 0.0 ? (s == 0 ? 1.0 : 0.0) : std::pow(lambda, s);
  }
  return spectral_synthesis(eig, f);
}

ComplexMatrix range_projection(const ComplexMatrix& a, double tol) {
  const HermitianEigen eig = eig_hermitian(a * a.adjoint());
  const double cutoff = tol * spectral_scale(eig.values);
  std::vector<double> f(eig.values.size());
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = (eig.values[k] > cutoff && eig.values[k] > 0) ? 1.0 : 0.0;
  return spectral_synthesis(eig, f);
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  // Eigenvalues of [[0, A], [A^*, 0]] are +-sigma; unlike eig(A^*A) this keeps
  // small singular values accurate relative to ||A|| instead of sqrt(eps).
  const std::size_t m = a.rows(), n = a.cols();
  ComplexMatrix dilation(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dilation(i, m + j) = a(i, j);
      dilation(m + j, i) = std::conj(a(i, j));
    }
  const HermitianEigen eig = eig_hermitian(dilation);
  std::vector<double> out;
  const std::size_t k = std::min(m, n);
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(std::max(eig.values[m + n - 1 - i], 0.0));
  return out;
}

double operator_norm(const ComplexMatrix& a) {
  if (a.empty()) return 0.0;
  return singular_values(a).front();
}

ComplexMatrix inverse(const ComplexMatrix& input) {
  if (!input.is_square()) throw Error(ErrorKind::ShapeMismatch, "inverse: not square");
  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  const double scale = std::max(input.max_abs(), 1e-300);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (std::abs(a(pivot, col)) <= 1e-14 * scale) throw Error(ErrorKind::Singular, "matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Complex d = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= d;
      inv(col, c) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = a(r, col);
      if (f == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

LeastSquares::LeastSquares(const ComplexMatrix& a)
    : original_(a), qr_(a), rows_(a.rows()), cols_(a.cols()) {
  if (rows_ < cols_) throw Error(ErrorKind::ShapeMismatch, "LeastSquares needs rows >= cols");
  reflectors_.reserve(cols_);
  double rmax = 0.0;
  std::vector<double> diag(cols_);
  for (std::size_t k = 0; k < cols_; ++k) {
    CVector v(rows_ - k);
    for (std::size_t i = k; i < rows_; ++i) v[i - k] = qr_(i, k);
    const double xnorm = norm2(v);
    if (xnorm == 0.0) {
      reflectors_.emplace_back();
      diag[k] = 0.0;
      continue;
    }
    const Complex phase = std::abs(v[0]) > 0 ? v[0] / std::abs(v[0]) : Complex(1.0);
    const Complex alpha = -phase * xnorm;
    v[0] -= alpha;
    const double vnorm = norm2(v);
    for (auto& x : v) x /= vnorm;
    for (std::size_t j = k; j < cols_; ++j) {
      Complex dot = 0.0;
      for (std::size_t i = k; i < rows_; ++i) dot += std::conj(v[i - k]) * qr_(i, j);
      for (std::size_t i = k; i < rows_; ++i) qr_(i, j) -= 2.0 * v[i - k] * dot;
    }
    diag[k] = std::abs(qr_(k, k));
    rmax = std::max(rmax, diag[k]);
    reflectors_.push_back(std::move(v));
  }
  rank_ = 0;
  for (double d : diag)
    if (d > 1e-11 * std::max(rmax, 1e-300)) ++rank_;
}

CVector LeastSquares::solve(std::span<const Complex> b) const {
  if (b.size() != rows_) throw Error(ErrorKind::ShapeMismatch, "LeastSquares::solve: rhs length");
  if (!full_rank()) throw Error(ErrorKind::Singular, "LeastSquares: rank deficient");
  CVector y(b.begin(), b.end());
  for (std::size_t k = 0; k < cols_; ++k) {
    const auto& v = reflectors_[k];
    if (v.empty()) continue;
    Complex dot = 0.0;
    for (std::size_t i = k; i < rows_; ++i) dot += std::conj(v[i - k]) * y[i];
    for (std::size_t i = k; i < rows_; ++i) y[i] -= 2.0 * v[i - k] * dot;
  }
  CVector x(cols_);
  for (std::size_t k = cols_; k-- > 0;) {
    Complex acc = y[k];
    for (std::size_t j = k + 1; j < cols_; ++j) acc -= qr_(k, j) * x[j];
    x[k] = acc / qr_(k, k);
  }
  return x;
}

double LeastSquares::residual(std::span<const Complex> x, std::span<const Complex> b) const {
  CVector ax = original_.apply(x);
  for (std::size_t i = 0; i < ax.size(); ++i) ax[i] -= b[i];
  return norm2(ax);
}

}  // namespace fqg
