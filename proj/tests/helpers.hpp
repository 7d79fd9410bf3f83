#pragma once

#include <memory>
#include <string>

#include "fqg/catalog.hpp"
#include "fqg/quantum_group.hpp"
#include "fqg/random.hpp"

namespace fqg::test {

inline QuantumGroupPtr share(FiniteQuantumGroup g) { return std::make_shared<const FiniteQuantumGroup>(std::move(g)); }

inline AlgebraElement element(const QuantumGroupPtr& g, CVector coeffs) { return {g, std::move(coeffs)}; }

inline AlgebraElement indicator(const QuantumGroupPtr& g, std::initializer_list<int> support) {
  CVector c(g->dim());
  for (int s : support) c[s] = 1.0;
  return {g, std::move(c)};
}

inline AlgebraElement random_element(Rng& rng, const QuantumGroupPtr& g) { return {g, rng.ginibre(g->dim())}; }

}  // namespace fqg::test
