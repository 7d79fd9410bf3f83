#include "fqg/catalog.hpp"

#include <algorithm>

#include "fqg/error.hpp"

namespace fqg {

namespace {

std::string lowercase_name(const FiniteGroup& g) {
  std::string s = g.name();
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

FiniteQuantumGroup build_function_algebra(const FiniteGroup& group) {
  const auto n = static_cast<std::size_t>(group.order());
  QuantumGroupData d;
  d.name = group.name().empty() ? "function-algebra" : lowercase_name(group) + "-function";
  d.dim = n;
  d.mult.assign(n * n * n, 0.0);
  for (std::size_t g = 0; g < n; ++g) d.mult[(g * n + g) * n + g] = 1.0;
  d.unit.assign(n, 1.0);
  d.comult = ComplexMatrix(n * n, n);
  for (int s = 0; s < group.order(); ++s)
    for (int t = 0; t < group.order(); ++t) d.comult(s * n + t, group.mul(s, t)) = 1.0;
  d.counit.assign(n, 0.0);
  d.counit[group.identity()] = 1.0;
  d.antipode = ComplexMatrix(n, n);
  for (int g = 0; g < group.order(); ++g) d.antipode(group.inverse(g), g) = 1.0;
  d.star = ComplexMatrix::identity(n);
  d.haar.assign(n, 1.0 / static_cast<double>(n));
  d.unitary_antipode = d.antipode;
  return FiniteQuantumGroup(std::move(d));
}

FiniteQuantumGroup build_function_algebra(const CayleyTable& table) {
  return build_function_algebra(FiniteGroup(table));
}

FiniteQuantumGroup build_group_algebra(const FiniteGroup& group) {
  const auto n = static_cast<std::size_t>(group.order());
  QuantumGroupData d;
  d.name = group.name().empty() ? "group-algebra" : lowercase_name(group) + "-group";
  d.dim = n;
  d.mult.assign(n * n * n, 0.0);
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h) d.mult[(g * n + h) * n + group.mul(g, h)] = 1.0;
  d.unit.assign(n, 0.0);
  d.unit[group.identity()] = 1.0;
  d.comult = ComplexMatrix(n * n, n);
  for (std::size_t g = 0; g < n; ++g) d.comult(g * n + g, g) = 1.0;
  d.counit.assign(n, 1.0);
  d.antipode = ComplexMatrix(n, n);
  for (int g = 0; g < group.order(); ++g) d.antipode(group.inverse(g), g) = 1.0;
  d.star = d.antipode;
  d.haar.assign(n, 0.0);
  d.haar[group.identity()] = 1.0;
  d.unitary_antipode = d.antipode;
  return FiniteQuantumGroup(std::move(d));
}

FiniteQuantumGroup build_group_algebra(const CayleyTable& table) { return build_group_algebra(FiniteGroup(table)); }

FiniteQuantumGroup build_kac_paljutkin() {
  using namespace kp;
  constexpr std::size_t n = 8;
  const Complex i{0.0, 1.0};
  QuantumGroupData d;
  d.name = "kac-paljutkin";
  d.dim = n;
  d.mult.assign(n * n * n, 0.0);
  auto set_mult = [&](std::size_t a, std::size_t b, std::size_t c) { d.mult[(a * n + b) * n + c] = 1.0; };
  for (std::size_t k : {e1, e2, e3, e4}) set_mult(k, k, k);
  // matrix units a_ij a_kl = delta_jk a_il
  const std::size_t unit_index[2][2] = {{a11, a12}, {a21, a22}};
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) set_mult(unit_index[r][s], unit_index[s][t], unit_index[r][t]);

  d.unit.assign(n, 0.0);
  for (std::size_t k : {e1, e2, e3, e4, a11, a22}) d.unit[k] = 1.0;

  d.comult = ComplexMatrix(n * n, n);
  auto add = [&](std::size_t target, Complex c, std::size_t l, std::size_t r) { d.comult(l * n + r, target) += c; };
  add(e1, 1, e1, e1);
  add(e1, 1, e2, e2);
  add(e1, 1, e3, e3);
  add(e1, 1, e4, e4);
  for (std::size_t a : {a11, a12, a21, a22}) add(e1, 0.5, a, a);

  add(e2, 1, e1, e2);
  add(e2, 1, e2, e1);
  add(e2, 1, e3, e4);
  add(e2, 1, e4, e3);
  add(e2, 0.5, a11, a22);
  add(e2, 0.5, a22, a11);
  add(e2, 0.5 * i, a21, a12);
  add(e2, -0.5 * i, a12, a21);

  add(e3, 1, e1, e3);
  add(e3, 1, e3, e1);
  add(e3, 1, e2, e4);
  add(e3, 1, e4, e2);
  add(e3, 0.5, a11, a22);
  add(e3, 0.5, a22, a11);
  add(e3, -0.5 * i, a21, a12);
  add(e3, 0.5 * i, a12, a21);

  add(e4, 1, e1, e4);
  add(e4, 1, e4, e1);
  add(e4, 1, e2, e3);
  add(e4, 1, e3, e2);
  add(e4, 0.5, a11, a11);
  add(e4, 0.5, a22, a22);
  add(e4, -0.5, a12, a12);
  add(e4, -0.5, a21, a21);

  add(a11, 1, e1, a11);
  add(a11, 1, a11, e1);
  add(a11, 1, e2, a22);
  add(a11, 1, a22, e3);
  add(a11, 1, e3, a22);
  add(a11, 1, a22, e2);
  add(a11, 1, e4, a11);
  add(a11, 1, a11, e4);

  add(a12, 1, e1, a12);
  add(a12, 1, a12, e1);
  add(a12, i, e2, a21);
  add(a12, i, a21, e3);
  add(a12, -i, e3, a21);
  add(a12, -i, a21, e2);
  add(a12, -1, e4, a12);
  add(a12, -1, a12, e4);

  add(a21, 1, e1, a21);
  add(a21, 1, a21, e1);
  add(a21, -i, e2, a12);
  add(a21, -i, a12, e3);
  add(a21, i, e3, a12);
  add(a21, i, a12, e2);
  add(a21, -1, e4, a21);
  add(a21, -1, a21, e4);

  add(a22, 1, e1, a22);
  add(a22, 1, a22, e1);
  add(a22, 1, e2, a11);
  add(a22, 1, a11, e3);
  add(a22, 1, e3, a11);
  add(a22, 1, a11, e2);
  add(a22, 1, e4, a22);
  add(a22, 1, a22, e4);

  d.counit.assign(n, 0.0);
  d.counit[e1] = 1.0;

  // transpose on the matrix block, identity on the commutative part
  d.antipode = ComplexMatrix::identity(n);
  d.antipode(a12, a12) = 0.0;
  d.antipode(a21, a21) = 0.0;
  d.antipode(a21, a12) = 1.0;
  d.antipode(a12, a21) = 1.0;

  d.star = ComplexMatrix::identity(n);
  d.star(a12, a12) = 0.0;
  d.star(a21, a21) = 0.0;
  d.star(a21, a12) = 1.0;
  d.star(a12, a21) = 1.0;

  d.haar.assign(n, 0.0);
  for (std::size_t k : {e1, e2, e3, e4}) d.haar[k] = 0.125;
  d.haar[a11] = d.haar[a22] = 0.25;
  d.unitary_antipode = d.antipode;
  return FiniteQuantumGroup(std::move(d));
}

std::vector<CatalogEntry> catalog() {
  return {
      {"z2-function", ExampleKind::FunctionAlgebra, 2, true, true},
      {"z3-function", ExampleKind::FunctionAlgebra, 3, true, true},
      {"z4-function", ExampleKind::FunctionAlgebra, 4, true, true},
      {"s3-function", ExampleKind::FunctionAlgebra, 6, true, false},
      {"z2-group", ExampleKind::GroupAlgebra, 2, true, true},
      {"s3-group", ExampleKind::GroupAlgebra, 6, false, true},
      {"kac-paljutkin", ExampleKind::KacPaljutkin, 8, false, false},
  };
}

const CatalogEntry& catalog_entry(const std::string& name) {
  static const std::vector<CatalogEntry> entries = catalog();
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw Error(ErrorKind::UnknownExample, "no catalog example named '" + name + "'");
}

FiniteGroup example_group(const std::string& name) {
  const auto& entry = catalog_entry(name);
  if (entry.kind == ExampleKind::KacPaljutkin)
    throw Error(ErrorKind::UnknownExample, name + " is not built from a group");
  if (name.rfind("s3", 0) == 0) return FiniteGroup::symmetric3();
  return FiniteGroup::cyclic(name[1] - '0');
}

QuantumGroupPtr make_example(const std::string& name) {
  const auto& entry = catalog_entry(name);
  switch (entry.kind) {
    case ExampleKind::FunctionAlgebra:
      return std::make_shared<const FiniteQuantumGroup>(build_function_algebra(example_group(name)));
    case ExampleKind::GroupAlgebra:
      return std::make_shared<const FiniteQuantumGroup>(build_group_algebra(example_group(name)));
    case ExampleKind::KacPaljutkin:
      return std::make_shared<const FiniteQuantumGroup>(build_kac_paljutkin());
  }
  throw Error(ErrorKind::UnknownExample, name);
}

}  // namespace fqg
