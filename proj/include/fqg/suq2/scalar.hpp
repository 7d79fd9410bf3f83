#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fqg::suq2 {

using Rational = boost::multiprecision::cpp_rational;

Rational rational_pow(const Rational& base, int exponent);

/// Finite sum  sum_k c_k mu^k  with rational c_k and integer k.
/// Canonical: zero coefficients are never stored.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentScalar(int c) : LaurentScalar(Rational(c)) {}  // NOLINT

  static LaurentScalar monomial(int power, const Rational& c = 1);
  static LaurentScalar mu(int power = 1) { return monomial(power); }

  const std::map<int, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(int power) const;
  int min_power() const;  // 0 for the zero scalar
  int max_power() const;

  LaurentScalar pow(unsigned exponent) const;
  /// Throws EvalAtForbiddenMu at mu = 0 when a negative power is present.
  Rational evaluate(const Rational& mu) const;

  LaurentScalar& operator+=(const LaurentScalar& other);
  LaurentScalar& operator-=(const LaurentScalar& other);
  LaurentScalar& operator*=(const LaurentScalar& other);

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(LaurentScalar a, const LaurentScalar& b) { return a *= b; }
  friend LaurentScalar operator-(LaurentScalar a) { return LaurentScalar() - a; }
  bool operator==(const LaurentScalar&) const = default;

  /// e.g. "1 - mu^2", "-mu^-1", "0".
  std::string to_string() const;

 private:
  void add_term(int power, const Rational& c);
  std::map<int, Rational> terms_;
};

/// num / den kept in lowest terms: the denominator's lowest coefficient is 1
/// and its lowest power is 0.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const LaurentScalar& num);  // NOLINT
  RationalFunction(int c) : RationalFunction(LaurentScalar(c)) {}  // NOLINT
  /// Throws BadParameters on a zero denominator.
  RationalFunction(const LaurentScalar& num, const LaurentScalar& den);

  const LaurentScalar& numerator() const noexcept { return num_; }
  const LaurentScalar& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// mu is a deformation parameter: 0 and +-1 are rejected with
  /// EvalAtForbiddenMu, as is any mu where the denominator vanishes.
  Rational evaluate(const Rational& mu) const;

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a) { return RationalFunction() - a; }
  bool operator==(const RationalFunction&) const = default;

  std::string to_string() const;

 private:
  void reduce();
  LaurentScalar num_;
  LaurentScalar den_;
};

}  // namespace fqg::suq2
