#include "fqg/random.hpp"

#include <cmath>
#include <numbers>

namespace fqg {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  spare_ = radius * std::sin(2.0 * std::numbers::pi * u2);
  has_spare_ = true;
  return radius * std::cos(2.0 * std::numbers::pi * u2);
}

CVector Rng::ginibre(std::size_t n) {
  CVector v(n);
  for (auto& c : v) c = complex_normal();
  return v;
}

}  // namespace fqg
