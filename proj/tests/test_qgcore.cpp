#include "doctest.h"

#include <cmath>

#include "fqg/catalog.hpp"
#include "fqg/error.hpp"
#include "fqg/group.hpp"
#include "fqg/quantum_group.hpp"
#include "helpers.hpp"

using namespace fqg;
using fqg::test::share;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::BadParameters;
}

// Permutation matrix of a bijection on basis indices: column j = e_{sigma(j)}.
ComplexMatrix permutation_matrix(const std::vector<int>& sigma) {
  ComplexMatrix m(sigma.size(), sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) m(sigma[j], j) = 1.0;
  return m;
}

}  // namespace

TEST_SUITE("qgcore") {

TEST_CASE("function algebra of Z/2 has exact structure constants") {
  const auto g = share(build_function_algebra(FiniteGroup::cyclic(2)));
  CHECK(g->dim() == 2);
  CHECK(g->data().haar == CVector{0.5, 0.5});
  // Delta(delta_0) = delta_0 (x) delta_0 + delta_1 (x) delta_1
  CHECK(g->comultiply(g->basis(0)) == CVector{1.0, 0.0, 0.0, 1.0});
  CHECK(g->comultiply(g->basis(1)) == CVector{0.0, 1.0, 1.0, 0.0});
  const auto report = verify_axioms(*g, 1e-10);
  CHECK(report.passes);
  CHECK(report.max_residual() == 0.0);
}

TEST_CASE("the counit is not a Haar state on C(Z/2)") {
  QuantumGroupData d = build_function_algebra(FiniteGroup::cyclic(2)).data();
  d.haar = d.counit;
  const FiniteQuantumGroup g(d);
  const auto report = verify_axioms(g, 1e-10);
  CHECK_FALSE(report.passes);
  // (id (x) eps)Delta(delta_0) = delta_0 while eps(delta_0) 1 = delta_0 + delta_1: the
  // coefficient of delta_1 is off by one.
  CHECK(report.residual("haar_left_invariance") == doctest::Approx(1.0));
  CHECK(report.residual("haar_right_invariance") == doctest::Approx(1.0));
  CHECK(report.residual("haar_faithfulness") == 1.0);
}

TEST_CASE("trivial group gives the one-dimensional quantum group") {
  const FiniteGroup trivial(CayleyTable{{0}});
  for (const auto& g : {build_function_algebra(trivial), build_group_algebra(trivial)}) {
    CHECK(g.dim() == 1);
    CHECK(g.unit() == CVector{1.0});
    CHECK(g.data().haar == CVector{1.0});
    CHECK(verify_axioms(g, 1e-12).passes);
  }
}

TEST_CASE("C(S3) has the uniform Haar state") {
  const auto g = make_example("s3-function");
  CHECK(g->dim() == 6);
  for (const auto& w : g->data().haar) CHECK(std::abs(w - 1.0 / 6.0) < 1e-15);
  CHECK(verify_axioms(*g, 1e-12).passes);
}

TEST_CASE("group algebra of Z/2") {
  const auto g = make_example("z2-group");
  CHECK(g->multiply(g->basis(1), g->basis(1)) == g->basis(0));
  CHECK(g->data().haar == CVector{1.0, 0.0});
  CHECK(g->comultiply(g->basis(1)) == g->tensor(g->basis(1), g->basis(1)));
}

TEST_CASE("group algebra of S3 is noncommutative and cocommutative") {
  const auto g = make_example("s3-group");
  CHECK(g->dim() == 6);
  CHECK_FALSE(g->is_commutative());
  CHECK(g->is_cocommutative());
  CHECK(verify_axioms(*g, 1e-12).passes);
}

TEST_CASE("Kac-Paljutkin passes every axiom and is neither commutative nor cocommutative") {
  const auto g = make_example("kac-paljutkin");
  CHECK(g->dim() == 8);
  const auto report = verify_axioms(*g, 1e-12);
  CHECK(report.passes);
  CHECK(report.max_residual() <= 1e-12);
  CHECK_FALSE(g->is_commutative());
  CHECK_FALSE(g->is_cocommutative());
  // a noncommuting pair inside the M_2 block
  const CVector ab = g->multiply(g->basis(kp::a12), g->basis(kp::a21));
  const CVector ba = g->multiply(g->basis(kp::a21), g->basis(kp::a12));
  CHECK(max_abs_diff(ab, ba) > 0.5);
}

TEST_CASE("every catalog example passes at 1e-10 with a positive definite Gram matrix") {
  const auto entries = catalog();
  CHECK(entries.size() == 7);
  for (const auto& e : entries) {
    CAPTURE(e.name);
    const auto g = make_example(e.name);
    CHECK(g->dim() == e.dim);
    const auto report = verify_axioms(*g, 1e-10);
    CHECK(report.passes);
    CHECK(report.gram_min_eigenvalue > 0.0);
    CHECK(report.residual("haar_traciality") <= 1e-10);
    CHECK(report.residual("antipode_squared_identity") <= 1e-10);
    CHECK(g->is_commutative() == e.commutative);
    CHECK(g->is_cocommutative() == e.cocommutative);
  }
}

TEST_CASE("function algebras are cocommutative exactly for abelian groups") {
  for (const auto& group : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()}) {
    const auto g = build_function_algebra(group);
    CHECK(g.is_cocommutative() == group.is_abelian());
  }
}

TEST_CASE("invalid Cayley tables are rejected") {
  CHECK(kind_of([] { FiniteGroup(CayleyTable{{0, 1}, {1, 1}}); }) == ErrorKind::NotAGroup);
  CHECK(kind_of([] { FiniteGroup(CayleyTable{{0, 1}, {0, 1}}); }) == ErrorKind::NotAGroup);
}

TEST_CASE("malformed structure constants are rejected") {
  QuantumGroupData d = build_function_algebra(FiniteGroup::cyclic(2)).data();
  d.haar.pop_back();
  CHECK(kind_of([&] { FiniteQuantumGroup g(d); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("mixing owners is an error") {
  const auto a = make_example("z2-function");
  const auto b = make_example("z2-function");
  CHECK(kind_of([&] { (void)(AlgebraElement::one(a) + AlgebraElement::one(b)); }) == ErrorKind::OwnerMismatch);
}

TEST_CASE("automorphisms") {
  const auto z2 = make_example("z2-function");
  CHECK(is_automorphism(*z2, ComplexMatrix::identity(2), 1e-12));
  // the swap delta_0 <-> delta_1 preserves the pointwise product, the unit and the star
  CHECK(is_automorphism(*z2, permutation_matrix({1, 0}), 1e-12));

  const auto s3 = make_example("s3-function");
  const FiniteGroup group = FiniteGroup::symmetric3();
  for (int t = 0; t < group.order(); ++t) {
    std::vector<int> sigma(group.order());
    for (int g = 0; g < group.order(); ++g) sigma[g] = group.mul(group.mul(t, g), group.inverse(t));
    CHECK(is_automorphism(*s3, permutation_matrix(sigma), 1e-12));
  }
  // scaling by 2 does not fix the unit
  CHECK_FALSE(is_automorphism(*s3, ComplexMatrix::identity(6) * Complex(2.0), 1e-12));
  const auto x = AlgebraElement::basis(z2, 0);
  CHECK(apply_automorphism(permutation_matrix({1, 0}), x).coeffs() == CVector{0.0, 1.0});
}

}
