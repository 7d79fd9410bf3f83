#pragma once

#include <string>

#include "fqg/suq2/algebra.hpp"

namespace fqg::suq2 {

/// Evidence that ||x * y|| / (||x||_1 ||y||) is unbounded on SU_mu(2), using
/// x = c*^(2n), y = c^(2n). Every ratio reported is a certified lower bound:
/// ||a^(2n)|| = 1 and ||c|| <= 1 are the only norm facts used.
struct CounterexampleReport {
  int n = 0;
  Rational mu;
  RationalPolyElement convolution;   // c*^(2n) * c^(2n), computed symbolically
  RationalPolyElement expected;      // (-mu^-1)^(2n) phi(c^(2n) c*^(2n)) a^(2n)
  bool identity_holds = false;
  RationalFunction convolution_norm;  // mu^(-2n) phi(c^(2n) c*^(2n))
  RationalFunction l1_norm;           // ||c*^(2n)||_1 = phi(c*^n c^n)
  Rational convolution_norm_value;
  Rational l1_norm_value;
  Rational lower_bound;         // L(n, mu), valid since ||c^(2n)|| <= 1
  double lower_bound_decimal = 0.0;
  Rational weak_lower_bound;    // mu^(-2n) (1 - mu^(2n+2)) <= L(n, mu)
  std::string note;
};

/// L(n, mu) = mu^(-2n) (1 - mu^(2n+2)) / (1 - mu^(4n+2)) as a function of mu.
RationalFunction counterexample_lower_bound(int n);
/// L(n+1, mu) / L(n, mu); tends to mu^-2 as n grows.
RationalFunction lower_bound_growth_ratio(int n);

/// Throws BadParameters unless 1 <= n <= 4 and 0 < |mu| < 1.
CounterexampleReport counterexample_report(int n, const Rational& mu);

}  // namespace fqg::suq2
