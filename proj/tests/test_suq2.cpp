#include "doctest.h"

#include "fqg/error.hpp"
#include "fqg/random.hpp"
#include "fqg/suq2/algebra.hpp"
#include "fqg/suq2/counterexample.hpp"
#include "fqg/suq2/scalar.hpp"

using namespace fqg::suq2;
using fqg::Error;
using fqg::ErrorKind;

namespace {

const LaurentScalar mu = LaurentScalar::mu();
const PolyElement one = PolyElement::one();
const PolyElement a = PolyElement::generator(Letter::A);
const PolyElement a_star = PolyElement::generator(Letter::AStar);
const PolyElement c = PolyElement::generator(Letter::C);
const PolyElement c_star = PolyElement::generator(Letter::CStar);

PolyElement mono(int k, int m, int n, const LaurentScalar& coeff = 1) { return PolyElement::monomial({k, m, n}, coeff); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::BadParameters;
}

Word random_word(fqg::Rng& rng, std::size_t max_length) {
  const std::size_t length = rng.next() % (max_length + 1);
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(static_cast<Letter>(rng.next() % 4));
  return w;
}

}  // namespace

TEST_SUITE("suq2") {

TEST_CASE("Laurent scalars") {
  const LaurentScalar x = LaurentScalar(1) - mu.pow(2);
  CHECK(x.to_string() == "1 - mu^2");
  CHECK((x * LaurentScalar::mu(-2)).coefficient(-2) == 1);
  CHECK((x - x).is_zero());
  CHECK(x.evaluate(Rational(1, 2)) == Rational(3, 4));
  CHECK(LaurentScalar::mu(-1).evaluate(Rational(2, 3)) == Rational(3, 2));
  CHECK(kind_of([] { (void)LaurentScalar::mu(-1).evaluate(0); }) == ErrorKind::EvalAtForbiddenMu);
}

TEST_CASE("rational functions stay reduced") {
  const RationalFunction f(LaurentScalar(1) - mu.pow(4), LaurentScalar(1) - mu.pow(2));
  CHECK(f == RationalFunction(LaurentScalar(1) + mu.pow(2)));
  CHECK(f.denominator() == LaurentScalar(1));
  const RationalFunction g(LaurentScalar(1), LaurentScalar(1) + mu);
  CHECK((g * RationalFunction(LaurentScalar(1) + mu)) == RationalFunction(1));
  CHECK(g.evaluate(Rational(1, 3)) == Rational(3, 4));
  CHECK(kind_of([&] { (void)g.evaluate(1); }) == ErrorKind::EvalAtForbiddenMu);
  CHECK(kind_of([&] { (void)g.evaluate(0); }) == ErrorKind::EvalAtForbiddenMu);
  CHECK(kind_of([&] { (void)RationalFunction(LaurentScalar(1), LaurentScalar()); }) == ErrorKind::BadParameters);
}

TEST_CASE("normal form of short words") {
  // ac is already a_{1,0,1}; the relation ac = mu ca then gives ca = mu^-1 a_{1,0,1}
  CHECK(normalize("ac") == mono(1, 0, 1));
  CHECK(normalize("ca") == mono(1, 0, 1, LaurentScalar::mu(-1)));
  CHECK(normalize("c*a") == mono(1, 1, 0, LaurentScalar::mu(-1)));
  CHECK(normalize("ca*") == mono(-1, 0, 1, mu));
  CHECK(normalize("a*a") == one - mono(0, 1, 1));
  CHECK(normalize("aa*") == one - mono(0, 1, 1, mu.pow(2)));
  CHECK(normalize("cc*") == mono(0, 1, 1));
  CHECK(normalize("") == one);
  CHECK(kind_of([] { (void)parse_word("ab"); }) == ErrorKind::BadParameters);
}

TEST_CASE("defining relations hold in normal form") {
  CHECK(a_star * a + c_star * c == one);
  CHECK(a * a_star + LaurentScalar(mu.pow(2)) * (c_star * c) == one);
  CHECK(c_star * c == c * c_star);
  CHECK(a * c == mu * (c * a));
  CHECK(a * c_star == mu * (c_star * a));
}

TEST_CASE("multiplication is associative and compatible with the involution on random words") {
  fqg::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Word w1 = random_word(rng, 4), w2 = random_word(rng, 4), w3 = random_word(rng, 4);
    const PolyElement x = normalize(w1), y = normalize(w2), z = normalize(w3);
    CHECK((x * y) * z == x * (y * z));
    Word concatenated = w1;
    concatenated.insert(concatenated.end(), w2.begin(), w2.end());
    CHECK(normalize(concatenated) == x * y);
    Word starred(w1.rbegin(), w1.rend());
    for (auto& l : starred) l = star(l);
    CHECK(normalize(starred) == x.star());
    CHECK((x * y).star() == y.star() * x.star());
  }
}

TEST_CASE("Haar state") {
  CHECK(haar(one) == RationalFunction(1));
  CHECK(haar(c_star * c) == RationalFunction(LaurentScalar(1) - mu.pow(2), LaurentScalar(1) - mu.pow(4)));
  CHECK(haar(a).is_zero());
  CHECK(haar(c).is_zero());
  CHECK(haar(Monomial{0, 2, 2}) == RationalFunction(LaurentScalar(1) - mu.pow(2), LaurentScalar(1) - mu.pow(6)));
}

TEST_CASE("comultiplication") {
  CHECK(comultiply(one) == TensorElement::pure({one, one}));
  // (c (x) a + a* (x) c)^2 with ca* = mu a*c and ca = mu^-1 ac
  const TensorElement expected = TensorElement::pure({c * c, a * a}) +
                                 TensorElement::pure({mono(-1, 0, 1, mu + LaurentScalar::mu(-1)), mono(1, 0, 1)}) +
                                 TensorElement::pure({a_star * a_star, c * c});
  CHECK(comultiply(c * c) == expected);
  const TensorElement delta_a_star = TensorElement::pure({a_star, a_star}) - TensorElement::pure({mu * c, c_star});
  CHECK(comultiply(a_star) == delta_a_star);
  // Delta is multiplicative on a product that needs reordering
  CHECK(comultiply(c * a) == comultiply(c) * comultiply(a));
}

TEST_CASE("antipode and counit") {
  CHECK(antipode(a) == a_star);
  CHECK(antipode(a_star) == a);
  CHECK(antipode(c_star) == LaurentScalar::mu(-1) * (PolyElement() - c_star));
  CHECK(antipode(c) == mu * (PolyElement() - c));
  CHECK(antipode_inverse(antipode(a * c_star)) == a * c_star);
  CHECK(counit(a) == LaurentScalar(1));
  CHECK(counit(c).is_zero());
  // m(S (x) id)Delta(a) = a* a + c* c = 1
  PolyElement sum;
  const TensorElement delta = comultiply(a);
  for (const auto& [key, coeff] : delta.terms())
    sum += coeff * (antipode(PolyElement::monomial(key[0])) * PolyElement::monomial(key[1]));
  CHECK(sum == one);
}

TEST_CASE("compact convolution") {
  const PolyElement y = c_star * c + a * a;
  RationalPolyElement invariance;
  invariance.add_term(Monomial{}, haar(y));
  CHECK(convolve_compact(one, y) == invariance);
  // c*^2 * c^2 = mu^-2 (1 - mu^2)/(1 - mu^6) a^2
  RationalPolyElement expected;
  expected.add_term(Monomial{2, 0, 0}, RationalFunction(LaurentScalar::mu(-2) * (LaurentScalar(1) - mu.pow(2)),
                                                        LaurentScalar(1) - mu.pow(6)));
  CHECK(convolve_compact(power(c_star, 2), power(c, 2)) == expected);
  // c* * c = -mu^-1 (1 - mu^2)/(1 - mu^4) a
  RationalPolyElement degree_one;
  degree_one.add_term(Monomial{1, 0, 0}, RationalFunction(LaurentScalar::mu(-1) * (mu.pow(2) - LaurentScalar(1)),
                                                          LaurentScalar(1) - mu.pow(4)));
  CHECK(convolve_compact(c_star, c) == degree_one);
}

TEST_CASE("counterexample bound") {
  const auto r1 = counterexample_report(1, Rational(1, 2));
  CHECK(r1.identity_holds);
  CHECK(r1.lower_bound == Rational(80, 21));
  const auto r2 = counterexample_report(2, Rational(1, 2));
  CHECK(r2.identity_holds);
  CHECK(r2.lower_bound == Rational(16) * (1 - Rational(1, 64)) / (1 - Rational(1, 1024)));
  CHECK(r2.lower_bound > 10);
  CHECK(counterexample_report(3, Rational(3, 4)).identity_holds);
  CHECK(r1.weak_lower_bound <= r1.lower_bound);
  for (const Rational m : {Rational(1, 2), Rational(3, 4)}) {
    Rational previous = 0;
    for (int n = 1; n <= 4; ++n) {
      const Rational l = counterexample_lower_bound(n).evaluate(m);
      CHECK(l > previous);
      previous = l;
    }
  }
  // L(n + 1)/L(n) tends to mu^-2 = 4 at mu = 1/2
  const Rational ratio = lower_bound_growth_ratio(4).evaluate(Rational(1, 2));
  CHECK(ratio > 1);
  CHECK(abs(ratio - 4) < Rational(1, 100));
  CHECK(kind_of([] { (void)counterexample_report(0, Rational(1, 2)); }) == ErrorKind::BadParameters);
  CHECK(kind_of([] { (void)counterexample_report(1, Rational(1)); }) == ErrorKind::BadParameters);
  CHECK(kind_of([] { (void)counterexample_report(5, Rational(1, 2)); }) == ErrorKind::BadParameters);
}

}
