#include "fqg/quantum_group.hpp"

#include <algorithm>
#include <cmath>

#include "fqg/error.hpp"

namespace fqg {

namespace {

void require_length(std::span<const Complex> v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": expected length " + std::to_string(n) + ", got " +
                                              std::to_string(v.size()));
}

void require_shape(const ComplexMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": expected " + std::to_string(rows) + "x" +
                                              std::to_string(cols));
}

void track(double& worst, double value) { worst = std::max(worst, value); }

}  // namespace

FiniteQuantumGroup::FiniteQuantumGroup(QuantumGroupData data) : data_(std::move(data)) {
  const std::size_t n = data_.dim;
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "dimension must be positive");
  require_length(data_.mult, n * n * n, "mult");
  require_length(data_.unit, n, "unit");
  require_shape(data_.comult, n * n, n, "comult");
  require_length(data_.counit, n, "counit");
  require_shape(data_.antipode, n, n, "antipode");
  require_shape(data_.star, n, n, "star");
  require_length(data_.haar, n, "haar");
  if (data_.unitary_antipode.empty()) data_.unitary_antipode = data_.antipode;
  require_shape(data_.unitary_antipode, n, n, "unitary_antipode");

  left_regular_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) l(k, j) = data_.mult[(i * n + j) * n + k];
    left_regular_.push_back(std::move(l));
  }
}

CVector FiniteQuantumGroup::basis(std::size_t i) const {
  CVector e(dim());
  e.at(i) = 1.0;
  return e;
}

CVector FiniteQuantumGroup::multiply(std::span<const Complex> x, std::span<const Complex> y) const {
  const std::size_t n = dim();
  require_length(x, n, "multiply");
  require_length(y, n, "multiply");
  CVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == Complex{}) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Complex xy = x[i] * y[j];
      if (xy == Complex{}) continue;
      const Complex* m = &data_.mult[(i * n + j) * n];
      for (std::size_t k = 0; k < n; ++k) out[k] += xy * m[k];
    }
  }
  return out;
}

CVector FiniteQuantumGroup::star(std::span<const Complex> x) const {
  require_length(x, dim(), "star");
  CVector conj_x(x.begin(), x.end());
  for (auto& c : conj_x) c = std::conj(c);
  return data_.star.apply(conj_x);
}

CVector FiniteQuantumGroup::comultiply(std::span<const Complex> x) const {
  require_length(x, dim(), "comultiply");
  return data_.comult.apply(x);
}

Complex FiniteQuantumGroup::counit(std::span<const Complex> x) const { return apply_functional(data_.counit, x); }

CVector FiniteQuantumGroup::antipode(std::span<const Complex> x) const {
  require_length(x, dim(), "antipode");
  return data_.antipode.apply(x);
}

CVector FiniteQuantumGroup::unitary_antipode(std::span<const Complex> x) const {
  require_length(x, dim(), "unitary_antipode");
  return data_.unitary_antipode.apply(x);
}

Complex FiniteQuantumGroup::haar(std::span<const Complex> x) const { return apply_functional(data_.haar, x); }

Complex FiniteQuantumGroup::apply_functional(std::span<const Complex> functional, std::span<const Complex> x) const {
  require_length(functional, dim(), "functional");
  require_length(x, dim(), "functional argument");
  Complex s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += functional[i] * x[i];
  return s;
}

ComplexMatrix FiniteQuantumGroup::left_regular(std::span<const Complex> x) const {
  require_length(x, dim(), "left_regular");
  ComplexMatrix l(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i] != Complex{}) l += left_regular_[i] * x[i];
  return l;
}

CVector FiniteQuantumGroup::tensor(std::span<const Complex> x, std::span<const Complex> y) const {
  const std::size_t n = dim();
  require_length(x, n, "tensor");
  require_length(y, n, "tensor");
  CVector out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = x[i] * y[j];
  return out;
}

CVector FiniteQuantumGroup::tensor_multiply(std::span<const Complex> t, std::span<const Complex> u) const {
  const std::size_t n = dim();
  require_length(t, n * n, "tensor_multiply");
  require_length(u, n * n, "tensor_multiply");
  CVector out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex tij = t[i * n + j];
      if (tij == Complex{}) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Complex c = tij * u[k * n + l];
          if (c == Complex{}) continue;
          const Complex* mik = &data_.mult[(i * n + k) * n];
          const Complex* mjl = &data_.mult[(j * n + l) * n];
          for (std::size_t a = 0; a < n; ++a) {
            if (mik[a] == Complex{}) continue;
            const Complex ca = c * mik[a];
            for (std::size_t b = 0; b < n; ++b) out[a * n + b] += ca * mjl[b];
          }
        }
    }
  return out;
}

CVector FiniteQuantumGroup::tensor_star(std::span<const Complex> t) const {
  const std::size_t n = dim();
  require_length(t, n * n, "tensor_star");
  CVector out(n * n);
  const auto& s = data_.star;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex c = std::conj(t[i * n + j]);
      if (c == Complex{}) continue;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out[a * n + b] += c * s(a, i) * s(b, j);
    }
  return out;
}

ComplexMatrix FiniteQuantumGroup::gram() const {
  const std::size_t n = dim();
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const CVector ei_star = star(basis(i));
    for (std::size_t j = 0; j < n; ++j) g(i, j) = haar(multiply(ei_star, basis(j)));
  }
  return g;
}

bool FiniteQuantumGroup::is_commutative(double tol) const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (std::abs(data_.mult[(i * n + j) * n + k] - data_.mult[(j * n + i) * n + k]) > tol) return false;
  return true;
}

bool FiniteQuantumGroup::is_cocommutative(double tol) const {
  const std::size_t n = dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (std::abs(data_.comult(i * n + j, k) - data_.comult(j * n + i, k)) > tol) return false;
  return true;
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(QuantumGroupPtr owner, CVector coeffs) : owner_(std::move(owner)), coeffs_(std::move(coeffs)) {
  if (!owner_) throw Error(ErrorKind::OwnerMismatch, "element without an owner");
  require_length(coeffs_, owner_->dim(), "element");
}

AlgebraElement AlgebraElement::zero(QuantumGroupPtr owner) {
  const std::size_t n = owner->dim();
  return {std::move(owner), CVector(n)};
}

AlgebraElement AlgebraElement::one(QuantumGroupPtr owner) {
  CVector u = owner->unit();
  return {std::move(owner), std::move(u)};
}

AlgebraElement AlgebraElement::basis(QuantumGroupPtr owner, std::size_t i) {
  CVector e = owner->basis(i);
  return {std::move(owner), std::move(e)};
}

AlgebraElement AlgebraElement::star() const { return {owner_, owner_->star(coeffs_)}; }
AlgebraElement AlgebraElement::antipode() const { return {owner_, owner_->antipode(coeffs_)}; }
AlgebraElement AlgebraElement::unitary_antipode() const { return {owner_, owner_->unitary_antipode(coeffs_)}; }
Complex AlgebraElement::haar() const { return owner_->haar(coeffs_); }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_owner(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_owner(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_owner(a, b);
  return {a.owner_, a.owner_->multiply(a.coeffs_, b.coeffs_)};
}

void require_same_owner(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.owner() != b.owner())
    throw Error(ErrorKind::OwnerMismatch, "elements of '" + a.owner()->name() + "' and '" + b.owner()->name() + "'");
}

void require_owner(const AlgebraElement& a, const QuantumGroupPtr& owner) {
  if (a.owner() != owner)
    throw Error(ErrorKind::OwnerMismatch, "element of '" + a.owner()->name() + "' used with '" + owner->name() + "'");
}

double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_owner(a, b);
  return max_abs_diff(a.coeffs(), b.coeffs());
}

// ---------------------------------------------------------------------------

double AxiomReport::residual(std::string_view name) const {
  for (const auto& a : axioms)
    if (a.name == name) return a.residual;
  throw Error(ErrorKind::BadParameters, "no axiom named " + std::string(name));
}

double AxiomReport::max_residual() const {
  double worst = 0.0;
  for (const auto& a : axioms) worst = std::max(worst, a.residual);
  return worst;
}

AxiomReport verify_axioms(const FiniteQuantumGroup& g, double tol) {
  const std::size_t n = g.dim();
  const auto& d = g.data();
  const CVector& one = g.unit();
  std::vector<CVector> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = g.basis(i);
  std::vector<CVector> delta(n);
  for (std::size_t i = 0; i < n; ++i) delta[i] = g.comultiply(e[i]);

  AxiomReport report;
  report.example = g.name();
  report.tol = tol;
  auto add = [&](std::string name, double r) { report.axioms.push_back({std::move(name), r}); };

  double assoc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CVector ij = g.multiply(e[i], e[j]);
      for (std::size_t k = 0; k < n; ++k)
        track(assoc, max_abs_diff(g.multiply(ij, e[k]), g.multiply(e[i], g.multiply(e[j], e[k]))));
    }
  add("associativity", assoc);

  double unit = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    track(unit, max_abs_diff(g.multiply(one, e[i]), e[i]));
    track(unit, max_abs_diff(g.multiply(e[i], one), e[i]));
  }
  add("unit", unit);

  // (Delta (x) id) Delta and (id (x) Delta) Delta as vectors indexed (a*n + b)*n + c.
  double coassoc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    CVector left(n * n * n), right(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Complex c = delta[k][i * n + j];
        if (c == Complex{}) continue;
        for (std::size_t ab = 0; ab < n * n; ++ab) {
          left[ab * n + j] += c * delta[i][ab];
          right[i * n * n + ab] += c * delta[j][ab];
        }
      }
    track(coassoc, max_abs_diff(left, right));
  }
  add("coassociativity", coassoc);

  double hom = max_abs_diff(g.comultiply(one), g.tensor(one, one));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      track(hom, max_abs_diff(g.comultiply(g.multiply(e[i], e[j])), g.tensor_multiply(delta[i], delta[j])));
  add("comultiplication_homomorphism", hom);

  double comult_star = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    track(comult_star, max_abs_diff(g.comultiply(g.star(e[i])), g.tensor_star(delta[i])));
  add("comultiplication_star", comult_star);

  double counit = std::abs(g.counit(one) - 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    CVector left(n), right(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        left[j] += d.counit[i] * delta[k][i * n + j];
        right[i] += d.counit[j] * delta[k][i * n + j];
      }
    track(counit, max_abs_diff(left, e[k]));
    track(counit, max_abs_diff(right, e[k]));
    track(counit, std::abs(g.counit(g.star(e[k])) - std::conj(d.counit[k])));
    for (std::size_t j = 0; j < n; ++j)
      track(counit, std::abs(g.counit(g.multiply(e[k], e[j])) - d.counit[k] * d.counit[j]));
  }
  add("counit", counit);

  double antipode = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    CVector left(n), right(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Complex c = delta[k][i * n + j];
        if (c == Complex{}) continue;
        const CVector l = g.multiply(g.antipode(e[i]), e[j]);
        const CVector r = g.multiply(e[i], g.antipode(e[j]));
        for (std::size_t a = 0; a < n; ++a) {
          left[a] += c * l[a];
          right[a] += c * r[a];
        }
      }
    CVector expected = one;
    for (auto& c : expected) c *= d.counit[k];
    track(antipode, max_abs_diff(left, expected));
    track(antipode, max_abs_diff(right, expected));
  }
  add("antipode", antipode);

  double star = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    track(star, max_abs_diff(g.star(g.star(e[i])), e[i]));
    for (std::size_t j = 0; j < n; ++j)
      track(star, max_abs_diff(g.star(g.multiply(e[i], e[j])), g.multiply(g.star(e[j]), g.star(e[i]))));
  }
  add("star_involution", star);

  double left_inv = 0.0, right_inv = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    CVector left(n), right(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        left[i] += d.haar[j] * delta[k][i * n + j];
        right[j] += d.haar[i] * delta[k][i * n + j];
      }
    CVector expected = one;
    for (auto& c : expected) c *= d.haar[k];
    track(left_inv, max_abs_diff(left, expected));
    track(right_inv, max_abs_diff(right, expected));
  }
  add("haar_left_invariance", left_inv);
  add("haar_right_invariance", right_inv);
  add("haar_normalization", std::abs(g.haar(one) - 1.0));

  const ComplexMatrix gram = g.gram();
  double positivity = max_abs_diff(gram, gram.adjoint());
  double faithful = 1.0;
  try {
    const auto eig = eig_hermitian(gram, 1e-8);
    const double lo = eig.values.front();
    const double hi = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
    report.gram_min_eigenvalue = lo;
    track(positivity, std::max(0.0, -lo));
    faithful = (hi > 0.0 && lo > tol * hi) ? 0.0 : 1.0;
  } catch (const Error&) {
    positivity = std::max(positivity, 1.0);
  }
  add("haar_positivity", positivity);
  add("haar_faithfulness", faithful);

  double tracial = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      track(tracial, std::abs(g.haar(g.multiply(e[i], e[j])) - g.haar(g.multiply(e[j], e[i]))));
  add("haar_traciality", tracial);

  add("antipode_squared_identity", max_abs_diff(d.antipode * d.antipode, ComplexMatrix::identity(n)));
  add("unitary_antipode_equals_antipode", max_abs_diff(d.unitary_antipode, d.antipode));

  report.passes = std::all_of(report.axioms.begin(), report.axioms.end(),
                              [&](const AxiomResidual& a) { return a.residual <= tol; });
  return report;
}

AlgebraElement apply_automorphism(const ComplexMatrix& alpha, const AlgebraElement& x) {
  if (alpha.rows() != x.dim() || alpha.cols() != x.dim())
    throw Error(ErrorKind::ShapeMismatch, "automorphism matrix does not match the algebra dimension");
  return {x.owner(), alpha.apply(x.coeffs())};
}

bool is_automorphism(const FiniteQuantumGroup& g, const ComplexMatrix& alpha, double tol) {
  const std::size_t n = g.dim();
  if (alpha.rows() != n || alpha.cols() != n)
    throw Error(ErrorKind::ShapeMismatch, "automorphism matrix does not match the algebra dimension");
  try {
    (void)inverse(alpha);
  } catch (const Error&) {
    return false;
  }
  if (max_abs_diff(alpha.apply(g.unit()), g.unit()) > tol) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const CVector ai = alpha.column(i);
    if (max_abs_diff(alpha.apply(g.star(g.basis(i))), g.star(ai)) > tol) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (max_abs_diff(alpha.apply(g.multiply(g.basis(i), g.basis(j))), g.multiply(ai, alpha.column(j))) > tol)
        return false;
  }
  return true;
}

}  // namespace fqg
