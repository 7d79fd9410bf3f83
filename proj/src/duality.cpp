#include "fqg/duality.hpp"

#include <algorithm>
#include <cmath>

#include "fqg/error.hpp"
#include "fqg/lpconv.hpp"
#include "fqg/random.hpp"

namespace fqg {

namespace {

CVector vec(const ComplexMatrix& m) { return {m.entries().begin(), m.entries().end()}; }

ComplexMatrix columns_of(const std::vector<CVector>& cols) {
  ComplexMatrix a(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) a.set_column(j, cols[j]);
  return a;
}

/// Solves A x = b and reports the relative residual.
CVector fit(const LeastSquares& ls, std::span<const Complex> b, double& relative_residual) {
  CVector x = ls.solve(b);
  relative_residual = ls.residual(x, b) / std::max(1.0, norm2(b));
  return x;
}

/// Sigma T Sigma for T on C^n (x) C^n.
ComplexMatrix flip_conjugate(const ComplexMatrix& t, std::size_t n) {
  ComplexMatrix out(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) out(a * n + b, c * n + d) = t(b * n + a, d * n + c);
  return out;
}

/// ((omega (x) id)(T))_{kl} = sum_ij row_i T[(i,k),(j,l)] col_j, i.e. omega = <row-form, . col>.
ComplexMatrix slice_first_leg(const ComplexMatrix& t, std::span<const Complex> row, std::span<const Complex> col,
                              std::size_t n) {
  ComplexMatrix y(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (row[i] == Complex{}) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Complex c = row[i] * col[j];
      if (c == Complex{}) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) y(k, l) += c * t(i * n + k, j * n + l);
    }
  }
  return y;
}

}  // namespace

GnsData gns(const FiniteQuantumGroup& g) {
  GnsData d;
  d.gram = g.gram();
  for (std::size_t i = 0; i < g.dim(); ++i) d.left_regular.push_back(g.left_regular(i));
  return d;
}

ComplexMatrix gram_adjoint(const ComplexMatrix& t, const ComplexMatrix& gram, const ComplexMatrix& gram_inverse) {
  return gram_inverse * t.adjoint() * gram;
}

MultiplicativeUnitary build_multiplicative_unitary(const FiniteQuantumGroup& g) {
  const auto report = verify_axioms(g, 1e-9);
  if (!report.passes)
    throw Error(ErrorKind::AxiomFailure, g.name() + " fails verify_axioms (max residual " +
                                             std::to_string(report.max_residual()) + ")");
  const std::size_t n = g.dim();
  const auto& d = g.data();
  // V = W^*: V(e_i (x) e_j) = sum_kl Delta_{kl,j} (e_k e_i) (x) e_l
  ComplexMatrix v(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Complex c = d.comult(k * n + l, j);
          if (c == Complex{}) continue;
          for (std::size_t a = 0; a < n; ++a) {
            const Complex m = d.mult[(k * n + i) * n + a];
            if (m != Complex{}) v(a * n + l, i * n + j) += c * m;
          }
        }
  MultiplicativeUnitary mu;
  const ComplexMatrix gram = g.gram();
  mu.gram = kron(gram, gram);
  const ComplexMatrix gram_inverse = kron(inverse(gram), inverse(gram));
  mu.w_star = v;
  mu.w = gram_adjoint(v, mu.gram, gram_inverse);
  const ComplexMatrix id = ComplexMatrix::identity(n * n);
  mu.unitarity_residual = std::max(max_abs_diff(mu.w * v, id), max_abs_diff(v * mu.w, id));
  if (mu.unitarity_residual > 1e-9)
    throw Error(ErrorKind::NotUnitary, "multiplicative unitary of " + g.name() + " deviates by " +
                                           std::to_string(mu.unitarity_residual));
  return mu;
}

double pentagon_residual(const ComplexMatrix& w, std::size_t n) {
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix w12 = kron(w, id);
  const ComplexMatrix w23 = kron(id, w);
  ComplexMatrix w13(n * n * n, n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t c2 = 0; c2 < n; ++c2) {
          const Complex x = w(a * n + c, a2 * n + c2);
          if (x == Complex{}) continue;
          for (std::size_t b = 0; b < n; ++b) w13((a * n + b) * n + c, (a2 * n + b) * n + c2) = x;
        }
  return max_abs_diff(w12 * w13 * w23, w23 * w12);
}

double implementation_residual(const FiniteQuantumGroup& g, const MultiplicativeUnitary& mu) {
  const std::size_t n = g.dim();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const ComplexMatrix lhs = mu.w_star * kron(id, g.left_regular(j)) * mu.w;
    ComplexMatrix rhs(n * n, n * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        const Complex c = g.data().comult(k * n + l, j);
        if (c != Complex{}) rhs += kron(g.left_regular(k), g.left_regular(l)) * c;
      }
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  return worst;
}

namespace {

ComplexMatrix fourier_of_coeffs(const FiniteQuantumGroup& g, const MultiplicativeUnitary& mu,
                                std::span<const Complex> x) {
  // x phi = <Lambda(1), . Lambda(x)>
  const std::size_t n = g.dim();
  const ComplexMatrix gram = g.gram();
  CVector row(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) row[j] += std::conj(g.unit()[i]) * gram(i, j);
  return slice_first_leg(mu.w, row, x, n);
}

}  // namespace

DualPair build_dual(QuantumGroupPtr g) {
  const std::size_t n = g->dim();
  DualPair dp;
  dp.base = g;
  dp.unitary = build_multiplicative_unitary(*g);
  dp.w_hat = flip_conjugate(dp.unitary.w_star, n);

  std::vector<CVector> vecs;
  for (std::size_t j = 0; j < n; ++j) {
    dp.dual_basis.push_back(fourier_of_coeffs(*g, dp.unitary, g->basis(j)));
    vecs.push_back(vec(dp.dual_basis.back()));
  }
  const LeastSquares basis_ls(columns_of(vecs));
  if (!basis_ls.full_rank())
    throw Error(ErrorKind::DegenerateDual, "dual basis of " + g->name() + " has rank " +
                                               std::to_string(basis_ls.rank()) + " < " + std::to_string(n));

  double worst = 0.0, r = 0.0;
  QuantumGroupData d;
  d.name = g->name() + "-dual";
  d.dim = n;
  d.mult.assign(n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CVector c = fit(basis_ls, vec(dp.dual_basis[i] * dp.dual_basis[j]), r);
      worst = std::max(worst, r);
      std::copy(c.begin(), c.end(), d.mult.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n));
    }
  d.unit = fit(basis_ls, vec(ComplexMatrix::identity(n)), r);
  worst = std::max(worst, r);
  if (worst > 1e-9) throw Error(ErrorKind::DegenerateDual, "dual basis span is not a unital algebra");
  dp.unit_preimage = d.unit;

  const ComplexMatrix gram = g->gram();
  const ComplexMatrix gram_inverse = inverse(gram);
  dp.gram_root = matrix_power(gram, 0.5);
  dp.gram_root_inverse = inverse(dp.gram_root);
  d.star = ComplexMatrix(n, n);
  std::vector<ComplexMatrix> adjoints;
  for (std::size_t j = 0; j < n; ++j) {
    adjoints.push_back(gram_adjoint(dp.dual_basis[j], gram, gram_inverse));
    d.star.set_column(j, fit(basis_ls, vec(adjoints.back()), r));
    if (r > 1e-9) throw Error(ErrorKind::DegenerateDual, "dual basis span is not closed under adjoints");
  }

  // Delta-hat(X) = W-hat^*(1 (x) X) W-hat, expanded in D_a (x) D_b.
  const ComplexMatrix w_hat_star = flip_conjugate(dp.unitary.w, n);
  std::vector<CVector> tensor_vecs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) tensor_vecs.push_back(vec(kron(dp.dual_basis[a], dp.dual_basis[b])));
  const LeastSquares tensor_ls(columns_of(tensor_vecs));
  d.comult = ComplexMatrix(n * n, n);
  const ComplexMatrix id = ComplexMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const ComplexMatrix delta = w_hat_star * kron(id, dp.dual_basis[j]) * dp.w_hat;
    d.comult.set_column(j, fit(tensor_ls, vec(delta), r));
    dp.comultiplication_residual = std::max(dp.comultiplication_residual, r);
  }

  // epsilon-hat(lambda(x phi)) = phi(x); S-hat(lambda(x phi)) = lambda(S(x) phi) in the Kac case.
  d.counit = g->data().haar;
  d.antipode = g->data().antipode;
  d.unitary_antipode = g->data().unitary_antipode;

  // phi-hat(D_i^# D_j) = G_ij, solved for the coefficients of phi-hat.
  ComplexMatrix system(n * n, n);
  CVector rhs(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CVector c = fit(basis_ls, vec(adjoints[i] * dp.dual_basis[j]), r);
      for (std::size_t k = 0; k < n; ++k) system(i * n + j, k) = c[k];
      rhs[i * n + j] = gram(i, j);
    }
  const LeastSquares weight_ls(system);
  if (!weight_ls.full_rank()) throw Error(ErrorKind::PlancherelInconsistent, "Plancherel system is rank deficient");
  dp.dual_weight = fit(weight_ls, rhs, dp.plancherel_residual);
  if (dp.plancherel_residual > 1e-8)
    throw Error(ErrorKind::PlancherelInconsistent,
                "Plancherel system residual " + std::to_string(dp.plancherel_residual));
  Complex total{};
  for (std::size_t k = 0; k < n; ++k) total += dp.dual_weight[k] * d.unit[k];
  if (std::abs(total.imag()) > 1e-9 * std::abs(total) || total.real() <= 0.0)
    throw Error(ErrorKind::PlancherelInconsistent, "dual weight of 1 is not positive");
  dp.dual_weight_total = total.real();
  d.haar = dp.dual_weight;
  for (auto& c : d.haar) c /= dp.dual_weight_total;

  auto dual = std::make_shared<const FiniteQuantumGroup>(std::move(d));
  const auto report = verify_axioms(*dual, 1e-9);
  if (!report.passes)
    throw Error(ErrorKind::AxiomFailure, "dual of " + g->name() + " fails verify_axioms (max residual " +
                                             std::to_string(report.max_residual()) + ")");
  dp.dual = std::move(dual);
  return dp;
}

ComplexMatrix fourier(const DualPair& dp, const AlgebraElement& x) {
  require_owner(x, dp.base);
  return fourier_of_coeffs(*dp.base, dp.unitary, x.coeffs());
}

AlgebraElement fourier_element(const DualPair& dp, const AlgebraElement& x) {
  require_owner(x, dp.base);
  // D_j = F(e_j), so F(x) has the same coordinates as x
  return {dp.dual, x.coeffs()};
}

ComplexMatrix dual_operator(const DualPair& dp, const AlgebraElement& x) {
  require_owner(x, dp.dual);
  const std::size_t n = dp.dual->dim();
  ComplexMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    if (x.coeffs()[j] != Complex{}) out += dp.dual_basis[j] * x.coeffs()[j];
  return out;
}

AlgebraElement dual_element(const DualPair& dp, const ComplexMatrix& x, double tol) {
  const std::size_t n = dp.dual->dim();
  if (x.rows() != n || x.cols() != n) throw Error(ErrorKind::ShapeMismatch, "operator on H_phi expected");
  std::vector<CVector> vecs;
  for (const auto& b : dp.dual_basis) vecs.push_back(vec(b));
  const LeastSquares ls(columns_of(vecs));
  const CVector b = vec(x);
  CVector c = ls.solve(b);
  if (ls.residual(c, b) > tol * std::max(1.0, norm2(b)))
    throw Error(ErrorKind::NotInDual, "operator lies outside the span of the dual basis");
  return {dp.dual, std::move(c)};
}

AlgebraElement dual_fourier(const DualPair& dp, const AlgebraElement& x) {
  require_owner(x, dp.dual);
  const auto& g = *dp.base;
  const std::size_t n = g.dim();
  // X phi-hat = <Lambda-hat(1), . Lambda-hat(X)> and Lambda-hat(lambda(z phi)) = z.
  const ComplexMatrix gram = g.gram();
  CVector row(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) row[j] += std::conj(dp.unit_preimage[i]) * gram(i, j);
  const ComplexMatrix op = slice_first_leg(dp.w_hat, row, x.coeffs(), n);
  CVector y = op.apply(g.unit());
  const double scale = std::max(1.0, op.max_abs());
  if (max_abs_diff(op, g.left_regular(y)) > 1e-9 * scale)
    throw Error(ErrorKind::NotInDual, "dual Fourier image is not a left multiplication");
  return {dp.base, std::move(y)};
}

AlgebraElement dual_fourier(const DualPair& dp, const ComplexMatrix& x, double tol) {
  return dual_fourier(dp, dual_element(dp, x, tol));
}

ComplexMatrix range_projection(const DualPair& dp, const ComplexMatrix& x, double tol) {
  return dp.gram_root_inverse * range_projection(dp.gram_root * x * dp.gram_root_inverse, tol) * dp.gram_root;
}

Complex dual_weight(const DualPair& dp, const ComplexMatrix& x) {
  const AlgebraElement c = dual_element(dp, x);
  Complex s{};
  for (std::size_t k = 0; k < c.dim(); ++k) s += dp.dual_weight[k] * c.coeffs()[k];
  return s;
}

PlancherelReport plancherel_check(const DualPair& dp, std::size_t samples, std::uint64_t seed, double tol) {
  PlancherelReport rep;
  rep.samples = samples;
  rep.seed = seed;
  Rng rng(seed);
  const auto& g = *dp.base;
  const ComplexMatrix gram = g.gram();
  const ComplexMatrix gram_inverse = inverse(gram);
  for (std::size_t s = 0; s < samples; ++s) {
    const AlgebraElement x(dp.base, rng.ginibre(g.dim()));
    const double base_norm = std::sqrt(std::max(0.0, (x.star() * x).haar().real()));
    const ComplexMatrix f = fourier(dp, x);
    const double dual_norm = std::sqrt(std::max(0.0, dual_weight(dp, gram_adjoint(f, gram, gram_inverse) * f).real()));
    const double gap = std::abs(dual_norm - base_norm) / std::max(base_norm, 1e-300);
    rep.max_relative_gap = std::max(rep.max_relative_gap, gap);
  }
  rep.holds = rep.max_relative_gap <= tol;
  return rep;
}

ConvolutionTheoremReport convolution_theorem_check(const DualPair& dp, const AlgebraElement& x,
                                                   const AlgebraElement& y, double tol) {
  require_owner(x, dp.base);
  require_owner(y, dp.base);
  ConvolutionTheoremReport rep;
  const ComplexMatrix lhs = fourier(dp, convolve(x, y));
  const ComplexMatrix rhs = fourier(dp, x) * fourier(dp, y);
  rep.residual = max_abs_diff(lhs, rhs);
  rep.holds = rep.residual <= tol * std::max(1.0, rhs.max_abs());
  return rep;
}

BidualityReport biduality_check(const DualPair& dp, double tol) {
  const auto& g = *dp.base;
  const std::size_t n = g.dim();
  const DualPair dd = build_dual(dp.dual);
  // Both M and the bidual act on C^n; identify through left multiplications.
  std::vector<CVector> vecs;
  for (std::size_t i = 0; i < n; ++i) vecs.push_back(vec(g.left_regular(i)));
  const LeastSquares ls(columns_of(vecs));
  BidualityReport rep;
  rep.identification = ComplexMatrix(n, n);
  double r = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    rep.identification.set_column(j, fit(ls, vec(dd.dual_basis[j]), r));
    rep.residual = std::max(rep.residual, r);
  }
  const auto& t = rep.identification;
  const auto& b = dd.dual->data();
  for (std::size_t i = 0; i < n; ++i) {
    const CVector ti = t.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      CVector prod(n);
      for (std::size_t k = 0; k < n; ++k) prod[k] = b.mult[(i * n + j) * n + k];
      rep.residual = std::max(rep.residual, max_abs_diff(t.apply(prod), g.multiply(ti, t.column(j))));
    }
    // (T (x) T) Delta''(e_i) = Delta(T e_i)
    const ComplexMatrix tt = kron(t, t);
    rep.residual = std::max(rep.residual, max_abs_diff(tt.apply(b.comult.column(i)), g.comultiply(ti)));
    rep.residual = std::max(rep.residual, max_abs_diff(t.apply(b.star.column(i)), g.star(ti)));
    rep.residual = std::max(rep.residual, std::abs(g.haar(ti) - b.haar[i]));
    rep.residual = std::max(rep.residual, std::abs(g.counit(ti) - b.counit[i]));
  }
  rep.residual = std::max(rep.residual, max_abs_diff(t.apply(b.unit), g.unit()));
  rep.holds = rep.residual <= tol;
  return rep;
}

}  // namespace fqg
