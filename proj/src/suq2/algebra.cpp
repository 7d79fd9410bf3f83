#include "fqg/suq2/algebra.hpp"

#include <cstdlib>
#include <sstream>

#include "fqg/error.hpp"

namespace fqg::suq2 {

std::string Monomial::to_string() const {
  return "a_{" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(n) + "}";
}

Word parse_word(std::string_view text) {
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == ' ') continue;
    if (ch != 'a' && ch != 'c') throw Error(ErrorKind::BadParameters, "unexpected character in word: " + std::string(text));
    const bool starred = i + 1 < text.size() && text[i + 1] == '*';
    if (starred) ++i;
    if (ch == 'a') w.push_back(starred ? Letter::AStar : Letter::A);
    else w.push_back(starred ? Letter::CStar : Letter::C);
  }
  return w;
}

std::string to_string(const Word& word) {
  std::string s;
  for (Letter l : word) {
    switch (l) {
      case Letter::A: s += "a"; break;
      case Letter::AStar: s += "a*"; break;
      case Letter::C: s += "c"; break;
      case Letter::CStar: s += "c*"; break;
    }
  }
  return s;
}

Letter star(Letter l) {
  switch (l) {
    case Letter::A: return Letter::AStar;
    case Letter::AStar: return Letter::A;
    case Letter::C: return Letter::CStar;
    case Letter::CStar: return Letter::C;
  }
  return l;
}

Word letters(const Monomial& mono) {
  Word w(static_cast<std::size_t>(std::abs(mono.k)), mono.k >= 0 ? Letter::A : Letter::AStar);
  w.insert(w.end(), static_cast<std::size_t>(mono.m), Letter::CStar);
  w.insert(w.end(), static_cast<std::size_t>(mono.n), Letter::C);
  return w;
}

PolyElement PolyElement::one() { return monomial({0, 0, 0}); }

PolyElement PolyElement::monomial(const Monomial& m, const LaurentScalar& c) {
  PolyElement x;
  x.add_term(m, c);
  return x;
}

PolyElement PolyElement::generator(Letter l) {
  switch (l) {
    case Letter::A: return monomial({1, 0, 0});
    case Letter::AStar: return monomial({-1, 0, 0});
    case Letter::C: return monomial({0, 0, 1});
    case Letter::CStar: return monomial({0, 1, 0});
  }
  return {};
}

LaurentScalar PolyElement::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

void PolyElement::add_term(const Monomial& m, const LaurentScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyElement PolyElement::times(Letter l) const {
  PolyElement out;
  for (const auto& [mono, s] : terms_) {
    const auto [k, m, n] = mono;
    switch (l) {
      case Letter::C:
        out.add_term({k, m, n + 1}, s);
        break;
      case Letter::CStar:
        out.add_term({k, m + 1, n}, s);
        break;
      case Letter::A: {
        // c*^m c^n a = mu^-(m+n) a c*^m c^n; a* a = 1 - c*c
        const LaurentScalar f = s * LaurentScalar::mu(-(m + n));
        out.add_term({k + 1, m, n}, f);
        if (k < 0) out.add_term({k + 1, m + 1, n + 1}, -f);
        break;
      }
      case Letter::AStar: {
        // c*^m c^n a* = mu^(m+n) a* c*^m c^n; a a* = 1 - mu^2 c*c
        const LaurentScalar f = s * LaurentScalar::mu(m + n);
        out.add_term({k - 1, m, n}, f);
        if (k > 0) out.add_term({k - 1, m + 1, n + 1}, -(f * LaurentScalar::mu(2)));
        break;
      }
    }
  }
  return out;
}

PolyElement PolyElement::star() const {
  PolyElement out;
  for (const auto& [mono, s] : terms_) {
    const Word w = letters(mono);
    PolyElement term = PolyElement::one() * s;
    for (auto it = w.rbegin(); it != w.rend(); ++it) term = term.times(suq2::star(*it));
    out += term;
  }
  return out;
}

PolyElement& PolyElement::operator+=(const PolyElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

PolyElement& PolyElement::operator-=(const PolyElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

PolyElement& PolyElement::operator*=(const LaurentScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

PolyElement operator*(const PolyElement& a, const PolyElement& b) {
  PolyElement out;
  for (const auto& [mono, s] : b.terms()) {
    PolyElement term = a;
    for (Letter l : letters(mono)) term = term.times(l);
    out += term * s;
  }
  return out;
}

std::string PolyElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << m.to_string();
  }
  return os.str();
}

PolyElement power(const PolyElement& x, unsigned exponent) {
  PolyElement out = PolyElement::one();
  for (unsigned i = 0; i < exponent; ++i) out = out * x;
  return out;
}

PolyElement normalize(const Word& word) {
  PolyElement out = PolyElement::one();
  for (Letter l : word) out = out.times(l);
  return out;
}

PolyElement normalize(std::string_view word) { return normalize(parse_word(word)); }

RationalPolyElement::RationalPolyElement(const PolyElement& x) {
  for (const auto& [m, c] : x.terms()) add_term(m, RationalFunction(c));
}

RationalFunction RationalPolyElement::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void RationalPolyElement::add_term(const Monomial& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RationalPolyElement& RationalPolyElement::operator+=(const RationalPolyElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

RationalPolyElement& RationalPolyElement::operator-=(const RationalPolyElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

std::string RationalPolyElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << m.to_string();
  }
  return os.str();
}

TensorElement TensorElement::pure(const std::vector<PolyElement>& factors) {
  TensorElement out(factors.size());
  out.terms_.emplace(Key{}, LaurentScalar(1));
  for (const auto& f : factors) {
    std::map<Key, LaurentScalar> next;
    for (const auto& [key, s] : out.terms_)
      for (const auto& [m, c] : f.terms()) {
        Key k = key;
        k.push_back(m);
        next[k] += s * c;
      }
    out.terms_ = std::move(next);
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

void TensorElement::add_term(const Key& key, const LaurentScalar& c) {
  if (key.size() != legs_) throw Error(ErrorKind::ShapeMismatch, "tensor key has the wrong number of legs");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  if (other.legs_ != legs_) throw Error(ErrorKind::ShapeMismatch, "tensor leg counts differ");
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  if (other.legs_ != legs_) throw Error(ErrorKind::ShapeMismatch, "tensor leg counts differ");
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  if (a.legs() != b.legs()) throw Error(ErrorKind::ShapeMismatch, "tensor leg counts differ");
  std::map<std::pair<Monomial, Monomial>, PolyElement> cache;
  auto product = [&](const Monomial& x, const Monomial& y) -> const PolyElement& {
    auto it = cache.find({x, y});
    if (it == cache.end()) it = cache.emplace(std::pair{x, y}, PolyElement::monomial(x) * PolyElement::monomial(y)).first;
    return it->second;
  };
  TensorElement out(a.legs());
  for (const auto& [ka, sa] : a.terms())
    for (const auto& [kb, sb] : b.terms()) {
      std::vector<PolyElement> legs;
      legs.reserve(a.legs());
      for (std::size_t i = 0; i < a.legs(); ++i) legs.push_back(product(ka[i], kb[i]));
      const TensorElement t = TensorElement::pure(legs);
      const LaurentScalar s = sa * sb;
      for (const auto& [k, c] : t.terms()) out.add_term(k, s * c);
    }
  return out;
}

namespace {

TensorElement comultiply_letter(Letter l) {
  using P = PolyElement;
  const P a = P::generator(Letter::A), as = P::generator(Letter::AStar);
  const P c = P::generator(Letter::C), cs = P::generator(Letter::CStar);
  const LaurentScalar mu = LaurentScalar::mu();
  switch (l) {
    case Letter::A: return TensorElement::pure({a, a}) - TensorElement::pure({cs * mu, c});
    case Letter::AStar: return TensorElement::pure({as, as}) - TensorElement::pure({c * mu, cs});
    case Letter::C: return TensorElement::pure({c, a}) + TensorElement::pure({as, c});
    case Letter::CStar: return TensorElement::pure({cs, as}) + TensorElement::pure({a, cs});
  }
  return TensorElement(2);
}

TensorElement comultiply_monomial(const Monomial& mono) {
  TensorElement out = TensorElement::pure({PolyElement::one(), PolyElement::one()});
  for (Letter l : letters(mono)) out = out * comultiply_letter(l);
  return out;
}

/// Antimultiplicative extension of a map on generators.
PolyElement antimultiplicative(const PolyElement& x, const std::function<PolyElement(Letter)>& on_letter) {
  PolyElement out;
  for (const auto& [mono, s] : x.terms()) {
    PolyElement term = PolyElement::one() * s;
    const Word w = letters(mono);
    for (auto it = w.rbegin(); it != w.rend(); ++it) term = term * on_letter(*it);
    out += term;
  }
  return out;
}

}  // namespace

TensorElement comultiply(const PolyElement& x) {
  TensorElement out(2);
  for (const auto& [mono, s] : x.terms()) {
    const TensorElement d = comultiply_monomial(mono);
    for (const auto& [k, c] : d.terms()) out.add_term(k, s * c);
  }
  return out;
}

TensorElement comultiply_leg(const TensorElement& t, std::size_t leg) {
  if (leg >= t.legs()) throw Error(ErrorKind::ShapeMismatch, "leg index out of range");
  std::map<Monomial, TensorElement> cache;
  TensorElement out(t.legs() + 1);
  for (const auto& [key, s] : t.terms()) {
    auto it = cache.find(key[leg]);
    if (it == cache.end()) it = cache.emplace(key[leg], comultiply_monomial(key[leg])).first;
    for (const auto& [pair, c] : it->second.terms()) {
      TensorElement::Key k(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(leg));
      k.push_back(pair[0]);
      k.push_back(pair[1]);
      k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(leg) + 1, key.end());
      out.add_term(k, s * c);
    }
  }
  return out;
}

TensorElement map_leg(const TensorElement& t, std::size_t leg, const std::function<PolyElement(const PolyElement&)>& f) {
  if (leg >= t.legs()) throw Error(ErrorKind::ShapeMismatch, "leg index out of range");
  TensorElement out(t.legs());
  for (const auto& [key, s] : t.terms()) {
    const PolyElement image = f(PolyElement::monomial(key[leg]));
    for (const auto& [m, c] : image.terms()) {
      TensorElement::Key k = key;
      k[leg] = m;
      out.add_term(k, s * c);
    }
  }
  return out;
}

PolyElement multiply_legs(const TensorElement& t) {
  if (t.legs() != 2) throw Error(ErrorKind::ShapeMismatch, "multiply_legs needs two legs");
  PolyElement out;
  for (const auto& [key, s] : t.terms()) out += (PolyElement::monomial(key[0]) * PolyElement::monomial(key[1])) * s;
  return out;
}

RationalPolyElement contract_leg(const TensorElement& t, std::size_t leg,
                                 const std::function<RationalFunction(const Monomial&)>& f) {
  if (t.legs() != 2 || leg > 1) throw Error(ErrorKind::ShapeMismatch, "contract_leg needs two legs");
  RationalPolyElement out;
  for (const auto& [key, s] : t.terms()) {
    const RationalFunction v = f(key[leg]);
    if (!v.is_zero()) out.add_term(key[1 - leg], v * RationalFunction(s));
  }
  return out;
}

LaurentScalar counit(const PolyElement& x) {
  LaurentScalar out;
  for (const auto& [mono, s] : x.terms())
    if (mono.m == 0 && mono.n == 0) out += s;
  return out;
}

PolyElement antipode(const PolyElement& x) {
  return antimultiplicative(x, [](Letter l) {
    switch (l) {
      case Letter::A: return PolyElement::generator(Letter::AStar);
      case Letter::AStar: return PolyElement::generator(Letter::A);
      case Letter::CStar: return PolyElement::generator(Letter::CStar) * LaurentScalar::monomial(-1, -1);
      case Letter::C: return PolyElement::generator(Letter::C) * LaurentScalar::monomial(1, -1);
    }
    return PolyElement();
  });
}

PolyElement antipode_inverse(const PolyElement& x) {
  return antimultiplicative(x, [](Letter l) {
    switch (l) {
      case Letter::A: return PolyElement::generator(Letter::AStar);
      case Letter::AStar: return PolyElement::generator(Letter::A);
      case Letter::CStar: return PolyElement::generator(Letter::CStar) * LaurentScalar::monomial(1, -1);
      case Letter::C: return PolyElement::generator(Letter::C) * LaurentScalar::monomial(-1, -1);
    }
    return PolyElement();
  });
}

RationalFunction haar(const Monomial& mono) {
  if (mono.k != 0 || mono.m != mono.n) return RationalFunction();
  return RationalFunction(LaurentScalar(1) - LaurentScalar::mu(2), LaurentScalar(1) - LaurentScalar::mu(2 * mono.m + 2));
}

RationalFunction haar(const PolyElement& x) {
  RationalFunction out;
  for (const auto& [mono, s] : x.terms()) {
    const RationalFunction v = haar(mono);
    if (!v.is_zero()) out += v * RationalFunction(s);
  }
  return out;
}

RationalPolyElement convolve_compact(const PolyElement& x, const PolyElement& y) {
  return contract_leg(comultiply(y), 0,
                      [&](const Monomial& z) { return haar(antipode_inverse(PolyElement::monomial(z)) * x); });
}

}  // namespace fqg::suq2
