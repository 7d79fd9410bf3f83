#pragma once

#include <string>
#include <vector>

#include "fqg/group.hpp"
#include "fqg/quantum_group.hpp"

namespace fqg {

/// C(G): basis delta_g, pointwise product, Delta(delta_g) = sum_{st=g} delta_s (x) delta_t.
FiniteQuantumGroup build_function_algebra(const FiniteGroup& group);
FiniteQuantumGroup build_function_algebra(const CayleyTable& table);

/// C*(G): basis u_g, u_g u_h = u_gh, Delta(u_g) = u_g (x) u_g, phi(u_g) = [g = e].
FiniteQuantumGroup build_group_algebra(const FiniteGroup& group);
FiniteQuantumGroup build_group_algebra(const CayleyTable& table);

/// The 8-dimensional Kac-Paljutkin quantum group on C^4 (+) M_2, basis
/// e1, e2, e3, e4, a11, a12, a21, a22 (indices 0..7).
FiniteQuantumGroup build_kac_paljutkin();

namespace kp {
inline constexpr std::size_t e1 = 0, e2 = 1, e3 = 2, e4 = 3, a11 = 4, a12 = 5, a21 = 6, a22 = 7;
}

enum class ExampleKind { FunctionAlgebra, GroupAlgebra, KacPaljutkin };

struct CatalogEntry {
  std::string name;
  ExampleKind kind;
  std::size_t dim;
  bool commutative;
  bool cocommutative;
};

std::vector<CatalogEntry> catalog();
const CatalogEntry& catalog_entry(const std::string& name);  // throws UnknownExample

/// Builds a catalog example; every call constructs a fresh owner.
QuantumGroupPtr make_example(const std::string& name);

/// The underlying group of a function- or group-algebra example.
FiniteGroup example_group(const std::string& name);

}  // namespace fqg
