#include "doctest.h"

#include <cmath>

#include "fqg/catalog.hpp"
#include "fqg/error.hpp"
#include "fqg/group.hpp"
#include "fqg/lpconv.hpp"
#include "helpers.hpp"

using namespace fqg;
using fqg::test::indicator;
using fqg::test::random_element;

namespace {

// f * g (s) = (1/|G|) sum_t f(t) g(t^-1 s)
CVector classical_convolution(const FiniteGroup& group, const CVector& f, const CVector& g) {
  const int n = group.order();
  CVector out(n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) out[s] += f[t] * g[group.mul(group.inverse(t), s)];
  for (auto& c : out) c /= static_cast<double>(n);
  return out;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::BadParameters;
}

}  // namespace

TEST_SUITE("lpconv") {

TEST_CASE("exponent arithmetic") {
  CHECK(conjugate_exponent(1.0) == kInfinity);
  CHECK(conjugate_exponent(kInfinity) == 1.0);
  CHECK(conjugate_exponent(2.0) == doctest::Approx(2.0));
  CHECK(conjugate_exponent(4.0 / 3.0) == doctest::Approx(4.0));
  CHECK(young_exponent(4.0 / 3.0, 4.0 / 3.0) == doctest::Approx(2.0));
  CHECK(young_exponent(1.0, 1.0) == doctest::Approx(1.0));
  CHECK(young_exponent(2.0, 2.0) == kInfinity);
  CHECK(kind_of([] { (void)young_exponent(4.0, 4.0); }) == ErrorKind::BadExponents);
  CHECK(kind_of([] { (void)conjugate_exponent(0.5); }) == ErrorKind::BadExponents);
}

TEST_CASE("norms on C(Z/2)") {
  const auto g = make_example("z2-function");
  const auto space = WeightedLpSpace::base(g);
  for (double p : {1.0, 4.0 / 3.0, 2.0, 3.0, kInfinity}) {
    CAPTURE(p);
    CHECK(space.norm(AlgebraElement::one(g), p) == doctest::Approx(1.0).epsilon(1e-14));
    const double expected = p == kInfinity ? 1.0 : std::pow(0.5, 1.0 / p);
    CHECK(space.norm(indicator(g, {0}), p) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("norms are homogeneous, monotone in p, and satisfy Hoelder") {
  Rng rng(5);
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto g = make_example(e.name);
    const auto space = WeightedLpSpace::base(g);
    for (int i = 0; i < 20; ++i) {
      const auto x = random_element(rng, g), y = random_element(rng, g);
      const Complex c(0.3, -1.7);
      CHECK(space.norm(x * c, 1.5) == doctest::Approx(std::abs(c) * space.norm(x, 1.5)).epsilon(1e-12));
      double previous = 0.0;
      for (double p : {1.0, 4.0 / 3.0, 2.0, 4.0, kInfinity}) {
        const double v = space.norm(x, p);
        CHECK(v >= previous * (1 - 1e-12));
        previous = v;
      }
      for (double p : {1.0, 4.0 / 3.0, 2.0}) {
        const double lhs = std::abs((x * y).haar());
        CHECK(lhs <= space.norm(x, p) * space.norm(y, conjugate_exponent(p)) * (1 + kInequalitySlack));
      }
    }
  }
}

TEST_CASE("a non-tracial weight is rejected") {
  const auto g = make_example("s3-group");
  CVector w(6);
  w[3] = 1.0;  // the coefficient of one transposition is not a class function
  CHECK(kind_of([&] { WeightedLpSpace(g, w); }) == ErrorKind::NotTracial);
}

TEST_CASE("convolution matches the classical formula on every function algebra") {
  Rng rng(17);
  for (const auto& name : {"z2-function", "z3-function", "z4-function", "s3-function"}) {
    CAPTURE(name);
    const auto g = make_example(name);
    const FiniteGroup group = example_group(name);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto x = random_element(rng, g), y = random_element(rng, g);
      worst = std::max(worst, max_abs_diff(convolve(x, y).coeffs(), classical_convolution(group, x.coeffs(), y.coeffs())));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("convolution identities on C(Z/2)") {
  const auto g = make_example("z2-function");
  const auto d0 = indicator(g, {0}), d1 = indicator(g, {1});
  CHECK(max_abs_diff(convolve(d0, d0).coeffs(), CVector{0.5, 0.0}) < 1e-15);
  CHECK(max_abs_diff(convolve(d0, d1).coeffs(), CVector{0.0, 0.5}) < 1e-15);
  CHECK(max_abs_diff(convolve(d1, d1).coeffs(), CVector{0.5, 0.0}) < 1e-15);
}

TEST_CASE("1 * y = phi(y) 1, h * h = phi(h) h, and associativity") {
  Rng rng(23);
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto g = make_example(e.name);
    const auto one = AlgebraElement::one(g);
    const auto x = random_element(rng, g), y = random_element(rng, g), z = random_element(rng, g);
    CHECK(max_abs_diff(convolve(one, y), one * y.haar()) < 1e-12);
    CHECK(max_abs_diff(convolve(convolve(x, y), z), convolve(x, convolve(y, z))) < 1e-10);
  }
  const auto s3 = make_example("s3-function");
  const auto h = indicator(s3, {0, 1, 2});
  CHECK(max_abs_diff(convolve(h, h), h * h.haar()) < 1e-14);
}

TEST_CASE("functional form of the convolution") {
  const auto g = make_example("z2-function");
  const CVector phi = g->data().haar;
  CHECK(max_abs_diff(convolve_functional_form(*g, phi, phi), phi) < 1e-15);
  const auto d0 = indicator(g, {0});
  const CVector d0_phi = density_functional(d0);
  CHECK(max_abs_diff(convolve_functional_form(*g, d0_phi, d0_phi), density_functional(d0 * Complex(0.5))) < 1e-15);

  Rng rng(29);
  const auto s3 = make_example("s3-function");
  const auto space = WeightedLpSpace::base(s3);
  for (int i = 0; i < 10; ++i) {
    const auto x = random_element(rng, s3), y = random_element(rng, s3);
    const CVector lhs = convolve_functional_form(*s3, density_functional(x), density_functional(y));
    CHECK(max_abs_diff(lhs, density_functional(convolve(x, y))) < 1e-10);
    // ||omega * theta|| <= ||omega|| ||theta|| through the L^1 norm of densities
    const auto w = density(s3, lhs);
    CHECK(space.norm(w, 1.0) <= space.norm(x, 1.0) * space.norm(y, 1.0) * (1 + kInequalitySlack));
  }
}

TEST_CASE("delta-twisted convolution agrees with convolve") {
  const auto z2 = make_example("z2-function");
  const auto one = AlgebraElement::one(z2);
  const CVector omega{Complex(0.2, 1.0), 0.7};
  // x = 1: omega(R(1)) 1 = omega(1) 1
  CHECK(max_abs_diff(delta_twisted_convolve(one, omega), one * (omega[0] + omega[1])) < 1e-15);
  const auto d0 = indicator(z2, {0});
  CHECK(max_abs_diff(delta_twisted_convolve(d0, density_functional(d0)).coeffs(), CVector{0.5, 0.0}) < 1e-15);

  const auto kp = make_example("kac-paljutkin");
  Rng rng(31);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto x = random_element(rng, kp), y = random_element(rng, kp);
    worst = std::max(worst, max_abs_diff(delta_twisted_convolve(x, density_functional(y)), convolve(x, y)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("Young's inequality") {
  const auto z2 = make_example("z2-function");
  const auto one = AlgebraElement::one(z2);
  for (double p : {1.0, 4.0 / 3.0, 2.0})
    CHECK(young_check(one, one, p, p).ratio == doctest::Approx(1.0).epsilon(1e-12));

  const auto d0 = indicator(z2, {0});
  const auto rep = young_check(d0, d0, 4.0 / 3.0, 4.0 / 3.0);
  CHECK(rep.r == doctest::Approx(2.0));
  CHECK(rep.lhs == doctest::Approx(std::pow(0.5, 1.5)).epsilon(1e-14));
  CHECK(rep.rhs == doctest::Approx(std::pow(0.5, 0.75) * std::pow(0.5, 0.75)).epsilon(1e-14));
  CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.holds);

  const auto kp = make_example("kac-paljutkin");
  const auto space = WeightedLpSpace::base(kp);
  Rng rng(37);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto x = random_element(rng, kp), y = random_element(rng, kp);
    for (double p : {1.0, 4.0 / 3.0, 1.5, 2.0})
      for (double q : {1.0, 4.0 / 3.0, 1.5, 2.0}) {
        if (1.0 / p + 1.0 / q - 1.0 < 0.0) continue;
        const auto r = young_check(space, x, y, p, q);
        worst = std::max(worst, r.ratio);
        CHECK(r.holds);
      }
  }
  CHECK(worst <= 1 + 1e-9);
  CHECK(kind_of([&] { (void)young_check(d0, d0, 4.0, 4.0); }) == ErrorKind::BadExponents);
}

TEST_CASE("L1 x Lp Young bound including p = infinity") {
  const auto z2 = make_example("z2-function");
  const auto one = AlgebraElement::one(z2);
  CHECK(young_l1_lp_check(one, one, kInfinity).ratio == doctest::Approx(1.0));
  const auto d0 = indicator(z2, {0});
  CHECK(young_l1_lp_check(d0, d0, 2.0).ratio == doctest::Approx(1.0).epsilon(1e-12));
  Rng rng(41);
  const auto kp = make_example("kac-paljutkin");
  for (int i = 0; i < 50; ++i) {
    const auto x = random_element(rng, kp), y = random_element(rng, kp);
    for (double p : {1.0, 2.0, 3.0, kInfinity}) CHECK(young_l1_lp_check(x, y, p).holds);
  }
}

TEST_CASE("Hausdorff-Young") {
  const auto z2 = make_example("z2-function");
  const auto dp = build_dual(z2);
  CHECK(hausdorff_young_check(dp, AlgebraElement::one(z2), 4.0 / 3.0).ratio == doctest::Approx(1.0).epsilon(1e-12));
  const auto rep = hausdorff_young_check(dp, indicator(z2, {0}), 4.0 / 3.0);
  CHECK(std::abs(rep.lhs - rep.rhs) <= 1e-9);

  const auto s3 = make_example("s3-function");
  const auto dps3 = build_dual(s3);
  const auto base = WeightedLpSpace::base(s3);
  const auto dual = WeightedLpSpace::dual(dps3);
  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_element(rng, s3);
    for (double p : {1.0, 4.0 / 3.0, 2.0}) CHECK(hausdorff_young_check(dps3, base, dual, x, p).holds);
  }
  CHECK(kind_of([&] { (void)hausdorff_young_check(dp, AlgebraElement::one(z2), 3.0); }) == ErrorKind::BadExponents);
}

TEST_CASE("norms transport along automorphisms") {
  const auto z2 = make_example("z2-function");
  CHECK(norm_transport_check(ComplexMatrix::identity(2), indicator(z2, {0}), 2.0).holds);
  const ComplexMatrix swap{{0.0, 1.0}, {1.0, 0.0}};
  const auto rep = norm_transport_check(swap, indicator(z2, {0}), 1.0);
  CHECK(rep.lhs == doctest::Approx(0.5));
  CHECK(rep.holds);

  const auto s3 = make_example("s3-function");
  const FiniteGroup group = FiniteGroup::symmetric3();
  const int t = 3;
  ComplexMatrix alpha(6, 6);
  for (int g = 0; g < 6; ++g) alpha(group.mul(group.mul(t, g), group.inverse(t)), g) = 1.0;
  Rng rng(47);
  for (int i = 0; i < 10; ++i) CHECK(norm_transport_check(alpha, random_element(rng, s3), 1.5).holds);
  CHECK(kind_of([&] { (void)norm_transport_check(ComplexMatrix::identity(6) * Complex(2.0), random_element(rng, s3), 1.5); }) ==
        ErrorKind::NotAutomorphism);
}

}
