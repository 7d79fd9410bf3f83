#include "doctest.h"

#include <cmath>
#include <set>

#include "fqg/catalog.hpp"
#include "fqg/error.hpp"
#include "fqg/lpconv.hpp"
#include "fqg/structures.hpp"
#include "helpers.hpp"

using namespace fqg;
using fqg::test::indicator;

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

AlgebraElement subset_indicator(const QuantumGroupPtr& g, unsigned mask) {
  CVector c(g->dim());
  for (std::size_t i = 0; i < g->dim(); ++i)
    if (mask & (1u << i)) c[i] = 1.0;
  return {g, std::move(c)};
}

bool is_subgroup(const FiniteGroup& group, unsigned mask) {
  if (!(mask & 1u)) return false;
  for (int a = 0; a < group.order(); ++a)
    for (int b = 0; b < group.order(); ++b)
      if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> group.mul(a, group.inverse(b)) & 1u)) return false;
  return true;
}

bool is_left_coset_of(const FiniteGroup& group, unsigned mask, unsigned subgroup) {
  for (int g = 0; g < group.order(); ++g) {
    unsigned coset = 0;
    for (int h = 0; h < group.order(); ++h)
      if (subgroup >> h & 1u) coset |= 1u << group.mul(g, h);
    if (coset == mask) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("structures") {

TEST_CASE("group-like projections on C(Z/2)") {
  const auto g = make_example("z2-function");
  CHECK(is_group_like_projection(AlgebraElement::one(g)).certified);
  CHECK(is_group_like_projection(indicator(g, {0})).certified);
  CHECK_FALSE(is_group_like_projection(indicator(g, {1})).certified);
  CHECK_FALSE(is_group_like_projection(AlgebraElement::zero(g)).certified);
}

TEST_CASE("properties of group-like projections") {
  const auto z2 = make_example("z2-function");
  CHECK(verify_glp_properties(AlgebraElement::one(z2)).all_hold());
  CHECK(verify_glp_properties(indicator(z2, {0})).all_hold());
  const auto s3 = make_example("s3-function");
  const auto props = verify_glp_properties(indicator(s3, {0, 1, 2}));
  CHECK(props.all_hold());
  for (const auto& c : props.checks()) CHECK(c.residual <= 1e-12);
  CHECK(props.find("modular_invariance")->note == kTrivialNote);
  CHECK(kind_of([&] { (void)verify_glp_properties(indicator(z2, {1})); }) == ErrorKind::NotGroupLike);
}

TEST_CASE("enumeration of group-like projections") {
  const auto z2 = make_example("z2-function");
  const auto z2_list = enumerate_group_like_projections(z2);
  REQUIRE(z2_list.size() == 2);
  CHECK(z2_list[0].coeffs() == CVector{1.0, 0.0});
  CHECK(z2_list[1].coeffs() == CVector{1.0, 1.0});
  CHECK(enumerate_group_like_projections(make_example("s3-function")).size() == 6);
  const auto group = enumerate_group_like_projections(make_example("z2-group"));
  REQUIRE(group.size() == 2);
  CHECK(group[0].coeffs() == CVector{1.0, 0.0});
  CHECK(group[1].coeffs() == CVector{0.5, 0.5});
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto list = enumerate_group_like_projections(make_example(e.name));
    CHECK_FALSE(list.empty());
    for (const auto& h : list) CHECK(is_group_like_projection(h).certified);
  }
  const auto foreign = test::share(build_function_algebra(FiniteGroup::cyclic(5)));
  CHECK(kind_of([&] { (void)enumerate_group_like_projections(foreign); }) == ErrorKind::UnknownExample);
}

TEST_CASE("biprojections") {
  const auto z2 = make_example("z2-function");
  const auto dp = build_dual(z2);
  CHECK(is_biprojection(dp, AlgebraElement::one(z2)).biprojection);
  const auto rep = is_biprojection(dp, indicator(z2, {0}));
  CHECK(rep.biprojection);
  CHECK(rep.multiple == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(is_biprojection(dp, indicator(z2, {1})).biprojection);
}

TEST_CASE("group-like projections and their Fourier transforms") {
  const auto z2 = make_example("z2-function");
  const auto dp = build_dual(z2);
  const auto one = glpbi_check(dp, AlgebraElement::one(z2));
  CHECK(one.all_hold());
  CHECK(one.find("weight_of_range")->lhs == doctest::Approx(1.0));
  const auto h = indicator(z2, {0});
  CHECK(glpbi_check(dp, h).all_hold());
  const ComplexMatrix range = range_projection(dp, fourier(dp, h));
  CHECK(dual_weight(dp, range).real() == doctest::Approx(2.0).epsilon(1e-12));

  const auto s3 = make_example("s3-function");
  const auto dps3 = build_dual(s3);
  const auto a3 = indicator(s3, {0, 1, 2});
  CHECK(glpbi_check(dps3, a3).all_hold());
  CHECK(dual_weight(dps3, range_projection(dps3, fourier(dps3, a3))).real() == doctest::Approx(2.0).epsilon(1e-12));

  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto g = make_example(e.name);
    const auto dpe = build_dual(g);
    for (const auto& hh : enumerate_group_like_projections(g)) {
      CHECK(is_biprojection(dpe, hh).biprojection);
      CHECK(glpbi_check(dpe, hh).all_hold());
      CHECK(max_abs_diff(convolve(hh, hh), hh * hh.haar()) <= 1e-12);
    }
  }
}

TEST_CASE("biprojection iff group-like on C(S3), against subgroup enumeration") {
  const auto s3 = make_example("s3-function");
  const auto dp = build_dual(s3);
  const FiniteGroup group = FiniteGroup::symmetric3();
  std::vector<AlgebraElement> candidates;
  std::size_t subgroups = 0;
  for (unsigned mask = 1; mask < 64; ++mask) {
    candidates.push_back(subset_indicator(s3, mask));
    if (is_subgroup(group, mask)) ++subgroups;
  }
  CHECK(subgroups == 6);
  Rng rng(3);
  candidates.push_back(test::random_element(rng, s3));
  const auto rep = biprojection_iff_grouplike(dp, candidates);
  CHECK(rep.holds());
  CHECK(rep.rejected_non_projections == 1);
  std::size_t group_like = 0;
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    const unsigned mask = static_cast<unsigned>(i + 1);
    CHECK(rep.entries[i].group_like == is_subgroup(group, mask));
    if (rep.entries[i].group_like) ++group_like;
  }
  CHECK(group_like == 6);
}

TEST_CASE("shifts on C(S3) are exactly the coset indicators") {
  const auto s3 = make_example("s3-function");
  const FiniteGroup group = FiniteGroup::symmetric3();
  for (unsigned sub = 1; sub < 64; ++sub) {
    if (!is_subgroup(group, sub)) continue;
    const auto h = subset_indicator(s3, sub);
    for (unsigned mask = 1; mask < 64; ++mask) {
      CAPTURE(sub);
      CAPTURE(mask);
      CHECK(shift_check(subset_indicator(s3, mask), h, Side::Left).certified == is_left_coset_of(group, mask, sub));
    }
  }
  const auto a3 = indicator(s3, {0, 1, 2});
  const auto coset = indicator(s3, {3, 4, 5});
  const auto cert = shift_check(coset, a3, Side::Left);
  CHECK(cert.certified);
  CHECK(cert.mu == 1.0);
  CHECK(shift_check(a3, a3, Side::Left).certified);
  CHECK(max_abs_diff(a3.unitary_antipode(), a3) == 0.0);
  CHECK_FALSE(shift_check(indicator(s3, {0, 3}), a3, Side::Left).certified);
  CHECK(kind_of([&] { (void)shift_check(coset, coset, Side::Left); }) == ErrorKind::NotGroupLike);
  CHECK(kind_of([&] { (void)shift_check(coset * Complex(2.0), a3, Side::Left); }) == ErrorKind::NotProjection);
}

TEST_CASE("R maps right shifts to left shifts") {
  const auto s3 = make_example("s3-function");
  const auto h = indicator(s3, {0, 3});  // the subgroup {e, (12)}
  for (unsigned mask = 1; mask < 64; ++mask) {
    const auto x = subset_indicator(s3, mask);
    if (!shift_check(x, h, Side::Right).certified) continue;
    CHECK(shift_check(x.unitary_antipode(), h, Side::Left).certified);
  }
}

TEST_CASE("bi-partial isometries") {
  const auto z2 = make_example("z2-function");
  const auto dp = build_dual(z2);
  const auto one = AlgebraElement::one(z2);
  const auto trivial = bipartial_isometry_check(dp, one, one);
  CHECK(trivial.all_hold());
  CHECK(trivial.find("fourier_norm")->lhs == doctest::Approx(1.0));
  const auto rep = bipartial_isometry_check(dp, indicator(z2, {1}), indicator(z2, {0}));
  CHECK(rep.all_hold());
  CHECK(rep.find("fourier_norm")->lhs == doctest::Approx(0.5).epsilon(1e-12));

  const auto s3 = make_example("s3-function");
  const auto dps3 = build_dual(s3);
  const auto coset = bipartial_isometry_check(dps3, indicator(s3, {3, 4, 5}), indicator(s3, {0, 1, 2}));
  CHECK(coset.all_hold());
  CHECK(coset.find("fourier_norm")->lhs == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(kind_of([&] { (void)bipartial_isometry_check(dps3, indicator(s3, {0, 3}), indicator(s3, {0, 1, 2})); }) ==
        ErrorKind::NotAShift);
}

TEST_CASE("partial isometry fit") {
  CHECK(multiple_of_partial_isometry(ComplexMatrix::diagonal(std::vector<double>{2.0, 0.0, 2.0})).holds);
  CHECK_FALSE(multiple_of_partial_isometry(ComplexMatrix::diagonal(std::vector<double>{2.0, 1.0})).holds);
  CHECK(multiple_of_partial_isometry(ComplexMatrix::zeros(2, 2)).holds);
}

TEST_CASE("bi-shifts") {
  SUBCASE("the group-like projection itself") {
    const auto s3 = make_example("s3-function");
    const auto dp = build_dual(s3);
    const auto h = indicator(s3, {0, 1, 2});
    const auto h_tilde = dual_element(dp, range_projection(dp, fourier(dp, h)));
    const auto x = bishift_construct(dp, {h, h, AlgebraElement::one(s3), h_tilde, h_tilde});
    // proportional to h
    const Complex c = x.coeffs()[0];
    CHECK(std::abs(c) > 1e-6);
    CHECK(max_abs_diff(x, h * c) < 1e-12);
    CHECK(bishift_theorem_check(dp, x).all_hold());
    CHECK(bishift_theorem_check(dp, h).all_hold());
    CHECK(max_abs(bishift_construct(dp, {h, h, AlgebraElement::zero(s3), h_tilde, h_tilde}).coeffs()) == 0.0);
  }
  SUBCASE("a modulated coset in C(Z/4)") {
    const auto z4 = make_example("z4-function");
    const auto dp = build_dual(z4);
    const auto h = indicator(z4, {0, 2});
    const auto x_h = indicator(z4, {1, 3});
    const auto h_tilde = dual_element(dp, range_projection(dp, fourier(dp, h)));
    const auto shifts = certified_left_shifts(h_tilde, projection_candidates(dp.dual));
    REQUIRE(shifts.size() == 2);  // h-tilde and the other coset of the annihilator of {0, 2}
    std::size_t modulated = 0;
    for (const auto& xt : shifts) {
      const bool trivial_character = max_abs_diff(xt, h_tilde) < 1e-9;
      // With y = 1 the nontrivial character sums to zero over the coset {1, 3}.
      const auto flat = bishift_construct(dp, {h, x_h, AlgebraElement::one(z4), h_tilde, xt});
      CHECK((max_abs(flat.coeffs()) > 1e-9) == trivial_character);
      // y = delta_1 picks one point of the coset and survives for both characters.
      const auto x = bishift_construct(dp, {h, x_h, indicator(z4, {1}), h_tilde, xt});
      REQUIRE(max_abs(x.coeffs()) > 1e-9);
      // a character restricted to a coset of {0, 2}: constant modulus on two
      // points and zero elsewhere, with x(g + 2) = +-x(g)
      std::set<int> support;
      for (int g = 0; g < 4; ++g)
        if (std::abs(x.coeffs()[g]) > 1e-9) support.insert(g);
      CHECK(support.size() == 2);
      const int g0 = *support.begin();
      CHECK(support.count((g0 + 2) % 4) == 1);
      const Complex ratio = x.coeffs()[(g0 + 2) % 4] / x.coeffs()[g0];
      CHECK(std::abs(ratio - (trivial_character ? 1.0 : -1.0)) < 1e-12);
      if (!trivial_character) ++modulated;
      CHECK(bishift_theorem_check(dp, x).all_hold());
    }
    CHECK(modulated == 1);
  }
  SUBCASE("a coset shift in C(S3)") {
    const auto s3 = make_example("s3-function");
    const auto dp = build_dual(s3);
    const auto h = indicator(s3, {0, 1, 2});
    const auto h_tilde = dual_element(dp, range_projection(dp, fourier(dp, h)));
    const auto x = bishift_construct(dp, {h, indicator(s3, {3, 4, 5}), AlgebraElement::one(s3), h_tilde, h_tilde});
    CHECK(max_abs(x.coeffs()) > 1e-6);
    const auto rep = bishift_theorem_check(dp, x);
    CHECK(rep.all_hold());
    CHECK(rep.find("fourier_norm_equals_l1")->residual <= 1e-9);
  }
  SUBCASE("errors") {
    const auto s3 = make_example("s3-function");
    const auto dp = build_dual(s3);
    const auto h = indicator(s3, {0, 1, 2});
    const auto h_tilde = dual_element(dp, range_projection(dp, fourier(dp, h)));
    CHECK(kind_of([&] {
            (void)bishift_construct(dp, {h, indicator(s3, {0, 3}), AlgebraElement::one(s3), h_tilde, h_tilde});
          }) == ErrorKind::CertificateMissing);
    CHECK(kind_of([&] { (void)bishift_theorem_check(dp, AlgebraElement::zero(s3)); }) == ErrorKind::NotABishift);
  }
}

TEST_CASE("sharpness at group-like projections") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto g = make_example(e.name);
    const auto dp = build_dual(g);
    for (const auto& h : enumerate_group_like_projections(g)) {
      for (double p : {1.0, 4.0 / 3.0, 2.0}) {
        const auto hy = hausdorff_young_check(dp, h, p);
        CHECK(std::abs(hy.lhs - hy.rhs) <= 1e-9 * std::max(1.0, hy.rhs));
        const auto y = young_check(h, h, p, p);
        CHECK(std::abs(y.ratio - 1.0) <= 1e-9);
      }
    }
  }
}

}
