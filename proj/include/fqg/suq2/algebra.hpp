#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fqg/suq2/scalar.hpp"

namespace fqg::suq2 {

/// a_{kmn} = a^k c*^m c^n for k >= 0 and a*^{-k} c*^m c^n for k < 0.
struct Monomial {
  int k = 0;
  int m = 0;
  int n = 0;

  auto operator<=>(const Monomial&) const = default;
  std::string to_string() const;
};

enum class Letter { A, AStar, C, CStar };

using Word = std::vector<Letter>;

/// Parses words such as "a*a", "ac*c"; throws BadParameters on anything else.
Word parse_word(std::string_view text);
std::string to_string(const Word& word);
Letter star(Letter l);
/// The letters whose product is the monomial, in order.
Word letters(const Monomial& m);

/// Element of the polynomial algebra in normal form.
class PolyElement {
 public:
  PolyElement() = default;
  static PolyElement one();
  static PolyElement monomial(const Monomial& m, const LaurentScalar& c = 1);
  static PolyElement generator(Letter l);

  const std::map<Monomial, LaurentScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentScalar coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const LaurentScalar& c);

  /// Involution; mu and every coefficient are real.
  PolyElement star() const;
  /// x * l for a single generator l, in normal form.
  PolyElement times(Letter l) const;

  PolyElement& operator+=(const PolyElement& other);
  PolyElement& operator-=(const PolyElement& other);
  PolyElement& operator*=(const LaurentScalar& s);

  friend PolyElement operator+(PolyElement a, const PolyElement& b) { return a += b; }
  friend PolyElement operator-(PolyElement a, const PolyElement& b) { return a -= b; }
  friend PolyElement operator*(PolyElement a, const LaurentScalar& s) { return a *= s; }
  friend PolyElement operator*(const LaurentScalar& s, PolyElement a) { return a *= s; }
  friend PolyElement operator*(const PolyElement& a, const PolyElement& b);
  bool operator==(const PolyElement&) const = default;

  std::string to_string() const;

 private:
  std::map<Monomial, LaurentScalar> terms_;
};

PolyElement power(const PolyElement& x, unsigned exponent);

/// Rewrites a word to normal form: a-letters are moved left of c-letters with
/// ca = mu^-1 ac, c*a = mu^-1 ac*, ca* = mu a*c, c*a* = mu a*c*, then
/// a*a = 1 - c*c, aa* = 1 - mu^2 c*c and cc* = c*c.
PolyElement normalize(const Word& word);
PolyElement normalize(std::string_view word);

/// Normal-form element with rational-function coefficients, produced by
/// applying the Haar state to one tensor leg.
class RationalPolyElement {
 public:
  RationalPolyElement() = default;
  explicit RationalPolyElement(const PolyElement& x);

  const std::map<Monomial, RationalFunction>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  RationalFunction coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const RationalFunction& c);

  RationalPolyElement& operator+=(const RationalPolyElement& other);
  RationalPolyElement& operator-=(const RationalPolyElement& other);
  friend RationalPolyElement operator-(RationalPolyElement a, const RationalPolyElement& b) { return a -= b; }
  bool operator==(const RationalPolyElement&) const = default;

  std::string to_string() const;

 private:
  std::map<Monomial, RationalFunction> terms_;
};

/// Element of the algebraic tensor power with a fixed number of legs.
class TensorElement {
 public:
  using Key = std::vector<Monomial>;

  explicit TensorElement(std::size_t legs) : legs_(legs) {}
  static TensorElement pure(const std::vector<PolyElement>& factors);

  std::size_t legs() const noexcept { return legs_; }
  const std::map<Key, LaurentScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const Key& key, const LaurentScalar& c);

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  /// Legwise product; throws ShapeMismatch when leg counts differ.
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  bool operator==(const TensorElement&) const = default;

 private:
  std::size_t legs_;
  std::map<Key, LaurentScalar> terms_;
};

/// Delta(a) = a(x)a - mu c*(x)c, Delta(c) = c(x)a + a*(x)c, extended as a
/// *-homomorphism.
TensorElement comultiply(const PolyElement& x);
/// Applies Delta to one leg, producing legs() + 1 legs.
TensorElement comultiply_leg(const TensorElement& t, std::size_t leg);
/// Replaces one leg by f of it.
TensorElement map_leg(const TensorElement& t, std::size_t leg, const std::function<PolyElement(const PolyElement&)>& f);
/// Product of the legs in order (two-leg tensors only).
PolyElement multiply_legs(const TensorElement& t);
/// Applies a functional to one leg of a two-leg tensor and returns the other.
RationalPolyElement contract_leg(const TensorElement& t, std::size_t leg,
                                 const std::function<RationalFunction(const Monomial&)>& f);

/// epsilon(a) = epsilon(a*) = 1, epsilon(c) = epsilon(c*) = 0.
LaurentScalar counit(const PolyElement& x);
/// Antimultiplicative with S(a) = a*, S(a*) = a, S(c*) = -mu^-1 c*, S(c) = -mu c.
PolyElement antipode(const PolyElement& x);
/// S^-1(a) = a*, S^-1(a*) = a, S^-1(c*) = -mu c*, S^-1(c) = -mu^-1 c.
PolyElement antipode_inverse(const PolyElement& x);

/// phi(a_kmn) = [k = 0][m = n] (1 - mu^2) / (1 - mu^(2m+2)).
RationalFunction haar(const Monomial& m);
RationalFunction haar(const PolyElement& x);

/// x * y = ((x phi) S^-1 (x) id) Delta(y), i.e. sum phi(S^-1(y_(1)) x) y_(2).
RationalPolyElement convolve_compact(const PolyElement& x, const PolyElement& y);

}  // namespace fqg::suq2
