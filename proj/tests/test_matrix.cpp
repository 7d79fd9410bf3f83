#include "doctest.h"

#include <cmath>

#include "fqg/error.hpp"
#include "fqg/matrix.hpp"
#include "fqg/random.hpp"

using namespace fqg;

TEST_SUITE("matrix") {

TEST_CASE("jacobi diagonalises a hermitian matrix") {
  Rng rng(3);
  ComplexMatrix a(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex z = i == j ? Complex(rng.normal(), 0.0) : rng.complex_normal();
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  const auto eig = eig_hermitian(a);
  for (std::size_t i = 1; i < eig.values.size(); ++i) CHECK(eig.values[i - 1] <= eig.values[i]);
  const ComplexMatrix rebuilt = eig.vectors * ComplexMatrix::diagonal(std::span<const double>(eig.values)) *
                                eig.vectors.adjoint();
  CHECK(max_abs_diff(rebuilt, a) < 1e-12);
  CHECK(max_abs_diff(eig.vectors * eig.vectors.adjoint(), ComplexMatrix::identity(5)) < 1e-12);
}

TEST_CASE("non-hermitian input is rejected") {
  const ComplexMatrix a{{1.0, 2.0}, {0.0, 1.0}};
  try {
    (void)eig_hermitian(a);
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
}

TEST_CASE("singular values of a diagonal matrix are the moduli, descending") {
  const ComplexMatrix a{{Complex(0.0, -3.0), 0.0}, {0.0, 2.0}};
  const auto sv = singular_values(a);
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(sv[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(operator_norm(a) == doctest::Approx(3.0));
}

TEST_CASE("inverse and singular detection") {
  const ComplexMatrix a{{2.0, 1.0}, {1.0, 1.0}};
  CHECK(max_abs_diff(a * inverse(a), ComplexMatrix::identity(2)) < 1e-15);
  const ComplexMatrix s{{1.0, 2.0}, {2.0, 4.0}};
  try {
    (void)inverse(s);
    FAIL("expected Singular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
}

TEST_CASE("matrix_power of a positive matrix") {
  const ComplexMatrix a{{4.0, 0.0}, {0.0, 9.0}};
  const ComplexMatrix r = matrix_power(a, 0.5);
  CHECK(std::abs(r(0, 0) - 2.0) < 1e-12);
  CHECK(std::abs(r(1, 1) - 3.0) < 1e-12);
  const ComplexMatrix rot{{1.0, 1.0}, {1.0, 1.0}};  // eigenvalues 0 and 2
  const ComplexMatrix half = matrix_power(rot, 0.5);
  CHECK(max_abs_diff(half * half, rot) < 1e-12);
}

TEST_CASE("range projection of a rank one matrix") {
  const CVector u{1.0, Complex(0.0, 1.0)};
  const ComplexMatrix p = range_projection(ComplexMatrix::outer(u, u));
  CHECK(max_abs_diff(p * p, p) < 1e-12);
  CHECK(std::abs(p.trace() - 1.0) < 1e-12);
}

TEST_CASE("least squares recovers an exact solution and reports the residual") {
  const ComplexMatrix a{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  const CVector x{2.0, Complex(0.0, -1.0)};
  const CVector b = a.apply(x);
  LeastSquares ls(a);
  CHECK(ls.full_rank());
  CHECK(max_abs_diff(ls.solve(b), x) < 1e-14);
  CHECK(ls.residual(x, b) < 1e-14);
}

TEST_CASE("kron matches the definition") {
  const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const ComplexMatrix b{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix k = kron(a, b);
  CHECK(k(0, 1) == Complex(1.0));
  CHECK(k(3, 2) == Complex(4.0));
  CHECK(k(2, 1) == Complex(3.0));
}

}
