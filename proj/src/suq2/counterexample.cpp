#include "fqg/suq2/counterexample.hpp"

#include "fqg/error.hpp"

namespace fqg::suq2 {

namespace {

LaurentScalar one_minus_mu(int power) { return LaurentScalar(1) - LaurentScalar::mu(power); }

}  // namespace

RationalFunction counterexample_lower_bound(int n) {
  return RationalFunction(LaurentScalar::mu(-2 * n) * one_minus_mu(2 * n + 2), one_minus_mu(4 * n + 2));
}

RationalFunction lower_bound_growth_ratio(int n) {
  return counterexample_lower_bound(n + 1) / counterexample_lower_bound(n);
}

CounterexampleReport counterexample_report(int n, const Rational& mu) {
  if (n < 1 || n > 4) throw Error(ErrorKind::BadParameters, "n must be in 1..4, got " + std::to_string(n));
  if (mu == 0 || mu <= -1 || mu >= 1) throw Error(ErrorKind::BadParameters, "need 0 < |mu| < 1, got " + mu.str());
  const auto un = static_cast<unsigned>(n);
  const PolyElement c = PolyElement::generator(Letter::C);
  const PolyElement cs = PolyElement::generator(Letter::CStar);
  const PolyElement x = power(cs, 2 * un);
  const PolyElement y = power(c, 2 * un);

  CounterexampleReport rep;
  rep.n = n;
  rep.mu = mu;
  rep.convolution = convolve_compact(x, y);

  const RationalFunction phi_ycx = haar(y * x);
  const RationalFunction sign_scale(LaurentScalar::monomial(-2 * n, 1));  // (-mu^-1)^(2n)
  rep.expected.add_term({2 * n, 0, 0}, sign_scale * phi_ycx);
  rep.identity_holds = rep.convolution == rep.expected;

  rep.convolution_norm = RationalFunction(LaurentScalar::mu(-2 * n)) * phi_ycx;
  rep.l1_norm = haar(power(cs, un) * power(c, un));
  rep.convolution_norm_value = rep.convolution_norm.evaluate(mu);
  rep.l1_norm_value = rep.l1_norm.evaluate(mu);
  rep.lower_bound = rep.convolution_norm_value / rep.l1_norm_value;
  rep.lower_bound_decimal = rep.lower_bound.convert_to<double>();
  rep.weak_lower_bound = rational_pow(mu, -2 * n) * (1 - rational_pow(mu, 2 * n + 2));
  if (rep.lower_bound != counterexample_lower_bound(n).evaluate(mu))
    throw Error(ErrorKind::AxiomFailure, "closed-form lower bound disagrees with the symbolic ratio");
  rep.note =
      "norm of the convolution uses ||a^(2n)|| = 1 and the Haar value phi(c^(2n) c*^(2n)); an intermediate "
      "reversed-order expression phi(c*^(2n) * c^(2n)) is a different quantity and is not used";
  return rep;
}

}  // namespace fqg::suq2
