#include "fqg/lpconv.hpp"

#include <algorithm>
#include <cmath>

#include "fqg/error.hpp"

namespace fqg {

double conjugate_exponent(double p) {
  if (!(p >= 1.0)) throw Error(ErrorKind::BadExponents, "exponent must be >= 1, got " + std::to_string(p));
  if (p == 1.0) return kInfinity;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

double young_exponent(double p, double q) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw Error(ErrorKind::BadExponents, "exponents must be >= 1");
  const double inv = (std::isinf(p) ? 0.0 : 1.0 / p) + (std::isinf(q) ? 0.0 : 1.0 / q) - 1.0;
  constexpr double eps = 1e-14;
  if (inv < -eps || inv > 1.0 + eps)
    throw Error(ErrorKind::BadExponents, "no r with 1/r = 1/p + 1/q - 1 for p = " + std::to_string(p) +
                                             ", q = " + std::to_string(q));
  if (inv <= eps) return kInfinity;
  return inv >= 1.0 - eps ? 1.0 : 1.0 / inv;
}

double LpSpectrum::norm(double p) const {
  if (!(p >= 1.0)) throw Error(ErrorKind::BadExponents, "exponent must be >= 1");
  if (std::isinf(p)) {
    double s = 0.0;
    for (double v : singular_values) s = std::max(s, v);
    return s;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < singular_values.size(); ++i)
    if (singular_values[i] > 0.0) total += weights[i] * std::pow(singular_values[i], p);
  return std::pow(std::max(total, 0.0), 1.0 / p);
}

WeightedLpSpace::WeightedLpSpace(QuantumGroupPtr owner, CVector weight) : owner_(std::move(owner)), weight_(std::move(weight)) {
  const auto& g = *owner_;
  const std::size_t n = g.dim();
  if (weight_.size() != n) throw Error(ErrorKind::ShapeMismatch, "weight length");
  const double scale = std::max(1e-300, max_abs(weight_));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex ij = apply_weight(g.multiply(g.basis(i), g.basis(j)));
      const Complex ji = apply_weight(g.multiply(g.basis(j), g.basis(i)));
      if (std::abs(ij - ji) > 1e-9 * scale)
        throw Error(ErrorKind::NotTracial, "weight on " + g.name() + " is not tracial");
    }
  ComplexMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const CVector ei_star = g.star(g.basis(i));
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = apply_weight(g.multiply(ei_star, g.basis(j)));
  }
  const auto eig = eig_hermitian(gram, 1e-8);
  if (eig.values.front() <= 1e-12 * std::abs(eig.values.back()))
    throw Error(ErrorKind::NotPositive, "weight on " + g.name() + " is not faithful and positive");
  std::vector<double> roots(n), inverse_roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    roots[i] = std::sqrt(eig.values[i]);
    inverse_roots[i] = 1.0 / roots[i];
  }
  root_ = eig.vectors * ComplexMatrix::diagonal(std::span<const double>(roots)) * eig.vectors.adjoint();
  root_inverse_ = eig.vectors * ComplexMatrix::diagonal(std::span<const double>(inverse_roots)) * eig.vectors.adjoint();
  root_unit_ = root_.apply(g.unit());
  weight_root_inverse_ = root_inverse_.transpose().apply(weight_);
}

WeightedLpSpace WeightedLpSpace::base(QuantumGroupPtr g) {
  CVector w = g->data().haar;
  return {std::move(g), std::move(w)};
}

WeightedLpSpace WeightedLpSpace::dual(const DualPair& dp) { return {dp.dual, dp.dual_weight}; }

Complex WeightedLpSpace::apply_weight(std::span<const Complex> x) const {
  Complex s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += weight_[i] * x[i];
  return s;
}

LpSpectrum WeightedLpSpace::spectrum(const AlgebraElement& x) const {
  require_owner(x, owner_);
  const std::size_t n = owner_->dim();
  // A = B L(x) B^{-1} is L(x) in an orthonormal frame of H_w; singular values
  // come from the Hermitian dilation [[0, A], [A^*, 0]], which keeps small
  // singular values accurate to machine precision relative to ||A||.
  const ComplexMatrix a = root_ * owner_->left_regular(x.coeffs()) * root_inverse_;
  ComplexMatrix dilation(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dilation(i, n + j) = a(i, j);
      dilation(n + j, i) = std::conj(a(i, j));
    }
  const auto eig = eig_hermitian(dilation, 1e-8);
  LpSpectrum s;
  s.singular_values.reserve(n);
  s.weights.reserve(n);
  for (std::size_t k = n; k < 2 * n; ++k) {
    const double sigma = std::max(eig.values[k], 0.0);
    // right singular vector v = sqrt(2) * lower half; projection weight w(B^{-1} v v^* B 1)
    Complex left{}, right{};
    for (std::size_t i = 0; i < n; ++i) {
      const Complex v = eig.vectors(n + i, k);
      left += weight_root_inverse_[i] * v;
      right += std::conj(v) * root_unit_[i];
    }
    s.singular_values.push_back(sigma);
    s.weights.push_back(2.0 * (left * right).real());
  }
  return s;
}

double lp_norm(const AlgebraElement& x, double p, const WeightedLpSpace& space) { return space.norm(x, p); }

AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_owner(x, y);
  const auto& g = *x.owner();
  const std::size_t n = g.dim();
  CVector f(n);
  for (std::size_t k = 0; k < n; ++k) f[k] = g.haar(g.multiply(g.data().unitary_antipode.column(k), x.coeffs()));
  const CVector dy = g.comultiply(y.coeffs());
  CVector out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) out[l] += dy[k * n + l] * f[k];
  return {x.owner(), std::move(out)};
}

CVector density_functional(const AlgebraElement& x) {
  const auto& g = *x.owner();
  CVector f(g.dim());
  for (std::size_t k = 0; k < g.dim(); ++k) f[k] = g.haar(g.multiply(g.basis(k), x.coeffs()));
  return f;
}

AlgebraElement density(QuantumGroupPtr g, std::span<const Complex> functional) {
  const std::size_t n = g->dim();
  if (functional.size() != n) throw Error(ErrorKind::ShapeMismatch, "functional length");
  ComplexMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) m(k, j) = g->haar(g->multiply(g->basis(k), g->basis(j)));
  CVector x = inverse(m).apply(functional);
  return {std::move(g), std::move(x)};
}

CVector convolve_functional_form(const FiniteQuantumGroup& g, std::span<const Complex> omega,
                                 std::span<const Complex> theta) {
  const std::size_t n = g.dim();
  if (omega.size() != n || theta.size() != n) throw Error(ErrorKind::ShapeMismatch, "functional length");
  CVector out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[k] += omega[i] * theta[j] * g.data().comult(i * n + j, k);
  return out;
}

AlgebraElement delta_twisted_convolve(const AlgebraElement& x, std::span<const Complex> omega) {
  const auto& g = *x.owner();
  const std::size_t n = g.dim();
  if (omega.size() != n) throw Error(ErrorKind::ShapeMismatch, "functional length");
  CVector omega_r(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) omega_r[l] += omega[m] * g.data().unitary_antipode(m, l);
  const CVector dx = g.comultiply(x.coeffs());
  CVector out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) out[k] += dx[k * n + l] * omega_r[l];
  return {x.owner(), std::move(out)};
}

InequalityReport make_inequality_report(double lhs, double rhs, double p, double q, double r) {
  InequalityReport rep;
  rep.p = p;
  rep.q = q;
  rep.r = r;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? kInfinity : 0.0);
  rep.holds = lhs <= rhs * (1.0 + kInequalitySlack);
  return rep;
}

InequalityReport young_check(const WeightedLpSpace& space, const AlgebraElement& x, const AlgebraElement& y,
                             double p, double q) {
  const double r = young_exponent(p, q);
  const double lhs = space.norm(convolve(x, y), r);
  return make_inequality_report(lhs, space.norm(x, p) * space.norm(y, q), p, q, r);
}

InequalityReport young_check(const AlgebraElement& x, const AlgebraElement& y, double p, double q) {
  return young_check(WeightedLpSpace::base(x.owner()), x, y, p, q);
}

InequalityReport young_l1_lp_check(const AlgebraElement& x, const AlgebraElement& y, double p) {
  return young_check(x, y, 1.0, p);
}

InequalityReport hausdorff_young_check(const DualPair& dp, const WeightedLpSpace& base_space,
                                       const WeightedLpSpace& dual_space, const AlgebraElement& x, double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw Error(ErrorKind::BadExponents, "Hausdorff-Young needs p in [1, 2]");
  const double pc = conjugate_exponent(p);
  const double lhs = dual_space.norm(fourier_element(dp, x), pc);
  return make_inequality_report(lhs, base_space.norm(x, p), p, pc, pc);
}

InequalityReport hausdorff_young_check(const DualPair& dp, const AlgebraElement& x, double p) {
  return hausdorff_young_check(dp, WeightedLpSpace::base(dp.base), WeightedLpSpace::dual(dp), x, p);
}

InequalityReport norm_transport_check(const ComplexMatrix& alpha, const AlgebraElement& x, double p) {
  const auto& g = *x.owner();
  if (!is_automorphism(g, alpha, 1e-9)) throw Error(ErrorKind::NotAutomorphism, "map is not a *-automorphism");
  const ComplexMatrix alpha_inverse = inverse(alpha);
  const CVector transported = alpha_inverse.transpose().apply(g.data().haar);
  const WeightedLpSpace original = WeightedLpSpace::base(x.owner());
  const WeightedLpSpace moved(x.owner(), transported);
  const double lhs = original.norm(x, p);
  const double rhs = moved.norm(apply_automorphism(alpha, x), p);
  InequalityReport rep = make_inequality_report(lhs, rhs, p, p, p);
  rep.holds = std::abs(lhs - rhs) <= kInequalitySlack * std::max(lhs, rhs);
  return rep;
}

}  // namespace fqg
