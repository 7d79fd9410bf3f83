#include "fqg/suq2/scalar.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "fqg/error.hpp"

namespace fqg::suq2 {

namespace {

using Poly = std::vector<Rational>;  // low degree first, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Splits s = mu^shift * p with p(0) != 0.
std::pair<int, Poly> to_poly(const LaurentScalar& s) {
  if (s.is_zero()) return {0, {}};
  const int lo = s.min_power();
  Poly p(static_cast<std::size_t>(s.max_power() - lo + 1));
  for (const auto& [k, c] : s.terms()) p[static_cast<std::size_t>(k - lo)] = c;
  return {lo, p};
}

LaurentScalar from_poly(const Poly& p, int shift) {
  LaurentScalar out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) out += LaurentScalar::monomial(shift + static_cast<int>(i), p[i]);
  return out;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  const Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

}  // namespace

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorKind::EvalAtForbiddenMu, "negative power of zero");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Rational out = 1, b = base;
  for (unsigned e = static_cast<unsigned>(exponent); e; e >>= 1, b *= b)
    if (e & 1u) out *= b;
  return out;
}

LaurentScalar::LaurentScalar(const Rational& c) { add_term(0, c); }

LaurentScalar LaurentScalar::monomial(int power, const Rational& c) {
  LaurentScalar s;
  s.add_term(power, c);
  return s;
}

void LaurentScalar::add_term(int power, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentScalar::coefficient(int power) const {
  const auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentScalar::min_power() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentScalar::max_power() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentScalar LaurentScalar::pow(unsigned exponent) const {
  LaurentScalar out(1), b = *this;
  for (; exponent; exponent >>= 1, b *= b)
    if (exponent & 1u) out *= b;
  return out;
}

Rational LaurentScalar::evaluate(const Rational& mu) const {
  if (mu == 0 && min_power() < 0) throw Error(ErrorKind::EvalAtForbiddenMu, "negative power of mu at mu = 0");
  Rational out = 0;
  for (const auto& [k, c] : terms_) out += c * rational_pow(mu, k);
  return out;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& other) {
  LaurentScalar out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : other.terms_) out.add_term(k1 + k2, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

std::string LaurentScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.str();
      continue;
    }
    if (mag != 1) os << mag.str() << "*";
    os << "mu";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

RationalFunction::RationalFunction(const LaurentScalar& num) : num_(num), den_(1) {}

RationalFunction::RationalFunction(const LaurentScalar& num, const LaurentScalar& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorKind::BadParameters, "zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  auto [ns, np] = to_poly(num_);
  auto [ds, dp] = to_poly(den_);
  if (dp.size() > 1) {
    const Poly g = gcd(np, dp);
    if (g.size() > 1) {
      np = divmod(np, g).first;
      dp = divmod(dp, g).first;
    }
  }
  const Rational lead = dp.front();
  for (auto& c : np) c /= lead;
  for (auto& c : dp) c /= lead;
  num_ = from_poly(np, ns - ds);
  den_ = from_poly(dp, 0);
}

Rational RationalFunction::evaluate(const Rational& mu) const {
  if (mu == 0 || mu == 1 || mu == -1)
    throw Error(ErrorKind::EvalAtForbiddenMu, "mu must avoid 0 and +-1, got " + mu.str());
  const Rational d = den_.evaluate(mu);
  if (d == 0) throw Error(ErrorKind::EvalAtForbiddenMu, "denominator vanishes at mu = " + mu.str());
  return num_.evaluate(mu) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) { return *this += -1 * other; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  if (other.is_zero()) throw Error(ErrorKind::BadParameters, "division by the zero rational function");
  num_ *= other.den_;
  den_ *= other.num_;
  reduce();
  return *this;
}

std::string RationalFunction::to_string() const {
  if (den_ == LaurentScalar(1)) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace fqg::suq2
