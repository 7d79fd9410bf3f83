#include "fqg/structures.hpp"

#include <algorithm>
#include <cmath>

#include "fqg/catalog.hpp"
#include "fqg/error.hpp"
#include "fqg/lpconv.hpp"
#include "fqg/random.hpp"

namespace fqg {

namespace {

struct Frame {
  ComplexMatrix root;
  ComplexMatrix root_inverse;
};

Frame haar_frame(const FiniteQuantumGroup& g) {
  Frame f;
  f.root = matrix_power(g.gram(), 0.5);
  f.root_inverse = inverse(f.root);
  return f;
}

ComplexMatrix frame_operator(const Frame& f, const ComplexMatrix& op) { return f.root * op * f.root_inverse; }

double projection_residual(const AlgebraElement& x) {
  return std::max(max_abs_diff(x.star(), x), max_abs_diff(x * x, x));
}

bool is_nonzero_projection(const AlgebraElement& x, double tol) {
  return max_abs(x.coeffs()) > tol && projection_residual(x) <= tol;
}

AlgebraElement scaled(AlgebraElement x, double s) { return x *= s; }

double relative(double residual, double scale) { return residual / std::max(1.0, scale); }

void add_unique(std::vector<AlgebraElement>& out, const AlgebraElement& x) {
  for (const auto& y : out)
    if (max_abs_diff(x, y) < 1e-8) return;
  out.push_back(x);
}

}  // namespace

GroupLikeCertificate is_group_like_projection(const AlgebraElement& h, double tol) {
  const auto& g = *h.owner();
  GroupLikeCertificate cert{h, {}, false};
  const CVector one = g.unit();
  cert.residuals.identity("self_adjoint", "h = h*", max_abs_diff(h.star(), h), tol);
  cert.residuals.identity("idempotent", "h = h^2", max_abs_diff(h * h, h), tol);
  cert.residuals.identity("nonzero", "h != 0", max_abs(h.coeffs()) > tol ? 0.0 : 1.0, tol);
  const CVector lhs = g.tensor_multiply(g.comultiply(h.coeffs()), g.tensor(one, h.coeffs()));
  cert.residuals.identity("defining_relation", "Delta(h)(1 (x) h) = h (x) h",
                          max_abs_diff(lhs, g.tensor(h.coeffs(), h.coeffs())), tol);
  cert.certified = cert.residuals.all_hold();
  return cert;
}

CheckList verify_glp_properties(const AlgebraElement& h, double tol) {
  if (!is_group_like_projection(h, tol).certified)
    throw Error(ErrorKind::NotGroupLike, "element is not a group-like projection");
  const auto& g = *h.owner();
  const CVector one = g.unit();
  CheckList out;
  out.identity("antipode_invariance", "S(h) = h", max_abs_diff(h.antipode(), h), tol);
  out.identity("unitary_antipode_invariance", "R(h) = h", max_abs_diff(h.unitary_antipode(), h), tol);
  const CVector lhs = g.tensor_multiply(g.comultiply(h.coeffs()), g.tensor(h.coeffs(), one));
  out.identity("mirrored_relation", "Delta(h)(h (x) 1) = h (x) h", max_abs_diff(lhs, g.tensor(h.coeffs(), h.coeffs())),
               tol);
  out.trivial("modular_invariance", "h = sigma_t^phi(h) = sigma_t^psi(h)");
  // phi = psi is asserted by right invariance of the stored Haar state
  const CVector h_phi = density_functional(h);
  out.identity("left_right_densities", "h phi = h psi", max_abs_diff(h_phi, density_functional(h)), tol);
  return out;
}

BiprojectionReport is_biprojection(const DualPair& dp, const AlgebraElement& h, double tol) {
  require_owner(h, dp.base);
  BiprojectionReport rep;
  rep.is_projection = is_nonzero_projection(h, tol);
  const ComplexMatrix a = dp.gram_root * fourier(dp, h) * dp.gram_root_inverse;
  const double norm2_a = std::pow(a.frobenius_norm(), 2);
  if (norm2_a == 0.0) {
    rep.projection_residual = 1.0;
    return rep;
  }
  // F = cP forces F^2 = cF, so c = <F, F^2> / <F, F>
  const ComplexMatrix a2 = a * a;
  Complex inner{};
  for (std::size_t i = 0; i < a.entries().size(); ++i) inner += std::conj(a.entries()[i]) * a2.entries()[i];
  const Complex c = inner / norm2_a;
  rep.multiple = c.real();
  if (std::abs(c) == 0.0) {
    rep.projection_residual = 1.0;
    return rep;
  }
  const ComplexMatrix p = a * (1.0 / c);
  rep.projection_residual = std::max({max_abs_diff(p * p, p), max_abs_diff(p, p.adjoint()),
                                      std::abs(c.imag()) / std::abs(c)});
  rep.biprojection = rep.is_projection && rep.projection_residual <= tol && rep.multiple > 0.0;
  return rep;
}

CheckList glpbi_check(const DualPair& dp, const AlgebraElement& h, double tol) {
  require_owner(h, dp.base);
  if (!is_group_like_projection(h, tol).certified)
    throw Error(ErrorKind::NotGroupLike, "element is not a group-like projection");
  const double phi_h = h.haar().real();
  CheckList out;
  const auto dual_cert = is_group_like_projection(scaled(fourier_element(dp, h), 1.0 / phi_h), tol);
  double worst = 0.0;
  for (const auto& c : dual_cert.residuals.checks()) worst = std::max(worst, c.residual);
  out.identity("dual_group_like", "phi(h)^{-1} F(h) is a group-like projection of the dual", worst, tol);

  const ComplexMatrix range = range_projection(dp, fourier(dp, h));
  const double weight = dual_weight(dp, range).real();
  Check& c = out.identity("weight_of_range", "phi(h) phi-hat(range F(h)) = 1", std::abs(phi_h * weight - 1.0), tol);
  c.lhs = phi_h * weight;
  c.rhs = 1.0;

  const AlgebraElement back = dual_fourier(dp, range);
  out.identity("biduality", "F-hat(range F(h)) = phi(h)^{-1} h", max_abs_diff(back, scaled(h, 1.0 / phi_h)), tol);
  return out;
}

EquivalenceReport biprojection_iff_grouplike(const DualPair& dp, const std::vector<AlgebraElement>& candidates,
                                             double tol) {
  EquivalenceReport rep;
  for (const auto& x : candidates) {
    require_owner(x, dp.base);
    if (!is_nonzero_projection(x, tol)) {
      ++rep.rejected_non_projections;
      continue;
    }
    EquivalenceEntry e{x, is_group_like_projection(x, tol).certified, is_biprojection(dp, x, tol).biprojection};
    if (e.group_like != e.biprojection) rep.disagreements.push_back(rep.entries.size());
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::string_view to_string(Side side) { return side == Side::Left ? "left" : "right"; }

ShiftCertificate shift_check(const AlgebraElement& x, const AlgebraElement& h, Side side, double tol) {
  require_same_owner(x, h);
  if (!is_group_like_projection(h, tol).certified)
    throw Error(ErrorKind::NotGroupLike, "base of a shift must be a group-like projection");
  if (projection_residual(x) > tol) throw Error(ErrorKind::NotProjection, "a shift must be a projection");
  const auto& g = *x.owner();
  const CVector one = g.unit();
  const CVector rx = x.unitary_antipode().coeffs();
  const CVector dx = g.comultiply(x.coeffs());
  const CVector dh = g.comultiply(h.coeffs());
  ShiftCertificate cert{x, h, side, 1.0, {}, false};
  if (side == Side::Left) {
    cert.checks.identity("coset_relation", "Delta(x)(1 (x) h) = x (x) h",
                         max_abs_diff(g.tensor_multiply(dx, g.tensor(one, h.coeffs())), g.tensor(x.coeffs(), h.coeffs())),
                         tol);
    cert.checks.identity("antipode_relation", "Delta(h)(1 (x) x) = R(x) (x) x",
                         max_abs_diff(g.tensor_multiply(dh, g.tensor(one, x.coeffs())), g.tensor(rx, x.coeffs())), tol);
  } else {
    cert.checks.identity("coset_relation", "Delta(x)(h (x) 1) = h (x) x",
                         max_abs_diff(g.tensor_multiply(dx, g.tensor(h.coeffs(), one)), g.tensor(h.coeffs(), x.coeffs())),
                         tol);
    cert.checks.identity("antipode_relation", "Delta(h)(x (x) 1) = x (x) R(x)",
                         max_abs_diff(g.tensor_multiply(dh, g.tensor(x.coeffs(), one)), g.tensor(x.coeffs(), rx)), tol);
  }
  Check& w = cert.checks.identity("weight_equality", side == Side::Left ? "phi(x) = phi(h)" : "psi(x) = psi(h)",
                                  std::abs(x.haar() - h.haar()), tol);
  w.lhs = x.haar().real();
  w.rhs = h.haar().real();
  cert.checks.trivial("scaling_invariance", "tau_t(x) = x");
  cert.checks.trivial("modular_invariance", "sigma_t^psi(x) = x");
  cert.checks.trivial("modular_element_eigenvector", "x delta^{it} = mu_x^{it} x with mu_x = 1");
  cert.checks.trivial("dual_modular_eigenvector", "sigma-hat_t(F(x)) = mu_x^{-it} F(x)");
  cert.certified = cert.checks.all_hold();
  return cert;
}

PartialIsometryFit multiple_of_partial_isometry(const ComplexMatrix& op) {
  PartialIsometryFit fit;
  const auto sv = singular_values(op);
  fit.s = sv.empty() ? 0.0 : sv.front();
  for (double v : sv) fit.spread = std::max(fit.spread, std::min(v, std::abs(v - fit.s)));
  fit.holds = fit.spread <= 1e-8 * fit.s || fit.s == 0.0;
  return fit;
}

PartialIsometryFit element_partial_isometry(const DualPair& dp, const AlgebraElement& x) {
  if (x.owner() == dp.base)
    return multiple_of_partial_isometry(frame_operator({dp.gram_root, dp.gram_root_inverse}, x.owner()->left_regular(x.coeffs())));
  return multiple_of_partial_isometry(frame_operator(haar_frame(*x.owner()), x.owner()->left_regular(x.coeffs())));
}

PartialIsometryFit operator_partial_isometry(const DualPair& dp, const ComplexMatrix& op) {
  return multiple_of_partial_isometry(dp.gram_root * op * dp.gram_root_inverse);
}

double hilbert_operator_norm(const DualPair& dp, const ComplexMatrix& op) {
  return operator_norm(dp.gram_root * op * dp.gram_root_inverse);
}

CheckList bipartial_isometry_check(const DualPair& dp, const AlgebraElement& x, const AlgebraElement& h, double tol) {
  require_owner(x, dp.base);
  bool shift = false;
  try {
    shift = shift_check(x, h, Side::Left, tol).certified;
  } catch (const Error&) {
    shift = false;
  }
  if (!shift) throw Error(ErrorKind::NotAShift, "element is not a certified left shift");
  const double phi_h = h.haar().real();
  CheckList out;
  const auto px = element_partial_isometry(dp, x);
  out.identity("partial_isometry", "x is a multiple of a partial isometry", px.spread, 1e-8 * std::max(px.s, 1e-300));
  const ComplexMatrix f = fourier(dp, x);
  const auto pf = operator_partial_isometry(dp, f);
  out.identity("fourier_partial_isometry", "F(x) is a multiple of a partial isometry", pf.spread,
               1e-8 * std::max(pf.s, 1e-300));
  const ComplexMatrix ff = gram_adjoint(f, dp.base->gram(), inverse(dp.base->gram())) * f;
  out.identity("fourier_square", "F(x)^* F(x) = phi(h) F(h)", max_abs_diff(ff, fourier(dp, h) * phi_h), tol);
  const double norm = hilbert_operator_norm(dp, f);
  Check& c = out.identity("fourier_norm", "||F(x)||_inf = phi(h)", std::abs(norm - phi_h), tol);
  c.lhs = norm;
  c.rhs = phi_h;
  return out;
}

AlgebraElement bishift_construct(const DualPair& dp, const BishiftContext& ctx, double tol) {
  require_owner(ctx.x_h, dp.base);
  require_owner(ctx.y, dp.base);
  require_owner(ctx.x_tilde, dp.dual);
  auto certified = [&](const AlgebraElement& x, const AlgebraElement& h) {
    try {
      return shift_check(x, h, Side::Left, tol).certified;
    } catch (const Error&) {
      return false;
    }
  };
  if (!certified(ctx.x_h, ctx.h)) throw Error(ErrorKind::CertificateMissing, "x_h is not a certified left shift of h");
  if (!certified(ctx.x_tilde, ctx.h_tilde))
    throw Error(ErrorKind::CertificateMissing, "x_tilde is not a certified left shift of the dual projection");
  return convolve(ctx.x_h * ctx.y, dual_fourier(dp, ctx.x_tilde));
}

CheckList bishift_theorem_check(const DualPair& dp, const AlgebraElement& x, double tol) {
  require_owner(x, dp.base);
  if (max_abs(x.coeffs()) <= tol) throw Error(ErrorKind::NotABishift, "zero element");
  const WeightedLpSpace base = WeightedLpSpace::base(dp.base);
  const WeightedLpSpace dual = WeightedLpSpace::dual(dp);
  const LpSpectrum sx = base.spectrum(x);
  const LpSpectrum sf = dual.spectrum(fourier_element(dp, x));
  CheckList out;
  out.trivial("modular_invariance", "sigma_t^phi(x) = x");
  out.trivial("modular_element_eigenvector", "x delta^{it} = mu^{it} x");
  const auto px = element_partial_isometry(dp, x);
  out.identity("partial_isometry", "x is a multiple of a partial isometry", px.spread, 1e-8 * std::max(px.s, 1e-300));
  const auto pf = operator_partial_isometry(dp, fourier(dp, x));
  out.identity("fourier_partial_isometry", "F(x) is a multiple of a partial isometry", pf.spread,
               1e-8 * std::max(pf.s, 1e-300));
  {
    const double lhs = sf.norm(kInfinity), rhs = sx.norm(1.0);
    Check& c = out.identity("fourier_norm_equals_l1", "||F(x)||_inf = ||x||_1", relative(std::abs(lhs - rhs), rhs), tol);
    c.lhs = lhs;
    c.rhs = rhs;
  }
  for (double p : {1.0, 4.0 / 3.0, 2.0}) {
    const double lhs = sf.norm(conjugate_exponent(p)), rhs = sx.norm(p);
    Check& c = out.identity("extremal_p=" + std::to_string(p).substr(0, 6), "||F_p(x)||_{p'} = ||x||_p",
                            relative(std::abs(lhs - rhs), rhs), tol);
    c.lhs = lhs;
    c.rhs = rhs;
  }
  return out;
}

std::vector<AlgebraElement> spectral_projections(const AlgebraElement& a, double tol) {
  const auto& g = *a.owner();
  const Frame f = haar_frame(g);
  ComplexMatrix h = frame_operator(f, g.left_regular(a.coeffs()));
  h = (h + h.adjoint()) * 0.5;
  const auto eig = eig_hermitian(h, 1e-8);
  const std::size_t n = g.dim();
  double scale = 0.0;
  for (double v : eig.values) scale = std::max(scale, std::abs(v));
  std::vector<AlgebraElement> out;
  std::size_t k = 0;
  while (k < n) {
    std::size_t end = k + 1;
    while (end < n && eig.values[end] - eig.values[k] <= tol * std::max(scale, 1.0)) ++end;
    ComplexMatrix p(n, n);
    for (std::size_t m = k; m < end; ++m) {
      const CVector v = eig.vectors.column(m);
      p += ComplexMatrix::outer(v, v);
    }
    const ComplexMatrix op = f.root_inverse * p * f.root;
    out.emplace_back(a.owner(), op.apply(g.unit()));
    k = end;
  }
  return out;
}

std::vector<AlgebraElement> projection_candidates(const QuantumGroupPtr& g, std::uint64_t seed) {
  const std::size_t n = g->dim();
  std::vector<AlgebraElement> families;
  Rng rng(seed);
  {
    const AlgebraElement z(g, rng.ginibre(n));
    families.push_back(z + z.star());
  }
  for (std::size_t i = 0; i < n; ++i) {
    const AlgebraElement e = AlgebraElement::basis(g, i);
    families.push_back(e + e.star());
    families.push_back(Complex(0, 1) * (e - e.star()));
  }
  std::vector<AlgebraElement> out;
  for (const auto& a : families) {
    const auto minimal = spectral_projections(a);
    const std::size_t k = minimal.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      AlgebraElement sum = AlgebraElement::zero(g);
      for (std::size_t b = 0; b < k; ++b)
        if (mask >> b & 1) sum += minimal[b];
      add_unique(out, sum);
    }
  }
  return out;
}

namespace {

std::vector<AlgebraElement> kac_paljutkin_candidates(const QuantumGroupPtr& g) {
  using namespace kp;
  const Complex i{0.0, 1.0};
  auto el = [&](std::initializer_list<std::pair<std::size_t, Complex>> terms) {
    CVector c(g->dim());
    for (const auto& [k, v] : terms) c[k] += v;
    return AlgebraElement(g, std::move(c));
  };
  // projections of the M_2 block: 0, the two diagonal units, identity, and the
  // rank-one projections onto (1, +-1)/sqrt2 and (1, +-i)/sqrt2
  const std::vector<AlgebraElement> block = {
      el({}),
      el({{a11, 1}}),
      el({{a22, 1}}),
      el({{a11, 1}, {a22, 1}}),
      el({{a11, 0.5}, {a12, 0.5}, {a21, 0.5}, {a22, 0.5}}),
      el({{a11, 0.5}, {a12, -0.5}, {a21, -0.5}, {a22, 0.5}}),
      el({{a11, 0.5}, {a12, -0.5 * i}, {a21, 0.5 * i}, {a22, 0.5}}),
      el({{a11, 0.5}, {a12, 0.5 * i}, {a21, -0.5 * i}, {a22, 0.5}}),
  };
  const std::size_t es[4] = {e1, e2, e3, e4};
  std::vector<AlgebraElement> out;
  for (unsigned mask = 0; mask < 16; ++mask)
    for (const auto& b : block) {
      AlgebraElement x = b;
      for (unsigned k = 0; k < 4; ++k)
        if (mask >> k & 1) x += AlgebraElement::basis(g, es[k]);
      out.push_back(std::move(x));
    }
  return out;
}

}  // namespace

std::vector<AlgebraElement> enumerate_group_like_projections(const QuantumGroupPtr& g) {
  const auto& entry = catalog_entry(g->name());
  std::vector<AlgebraElement> out;
  if (entry.kind == ExampleKind::KacPaljutkin) {
    for (const auto& x : kac_paljutkin_candidates(g))
      if (is_group_like_projection(x).certified) out.push_back(x);
    return out;
  }
  const FiniteGroup group = example_group(entry.name);
  if (static_cast<std::size_t>(group.order()) != g->dim())
    throw Error(ErrorKind::UnknownExample, g->name() + " does not match its catalog dimension");
  for (const auto& subgroup : group.subgroups()) {
    CVector c(g->dim());
    const double value = entry.kind == ExampleKind::FunctionAlgebra ? 1.0 : 1.0 / static_cast<double>(subgroup.size());
    for (int s : subgroup) c[s] = value;
    out.emplace_back(g, std::move(c));
  }
  return out;
}

std::vector<AlgebraElement> certified_left_shifts(const AlgebraElement& h, const std::vector<AlgebraElement>& pool,
                                                  double tol) {
  std::vector<AlgebraElement> out;
  for (const auto& x : pool) {
    if (!is_nonzero_projection(x, tol)) continue;
    if (shift_check(x, h, Side::Left, tol).certified) out.push_back(x);
  }
  return out;
}

}  // namespace fqg
