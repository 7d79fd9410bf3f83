#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "fqg/quantum_group.hpp"
#include "fqg/report.hpp"

namespace fqg {

using Json = nlohmann::ordered_json;

/// Complex numbers are [re, im]; matrices are arrays of rows. Doubles are
/// written in shortest round-trip form, so parse(dump(x)) is bit-exact.
Json to_json(Complex z);
Json to_json(std::span<const Complex> v);
Json to_json(const ComplexMatrix& m);
Complex complex_from_json(const Json& j);
CVector vector_from_json(const Json& j);
ComplexMatrix matrix_from_json(const Json& j);

/// {name, dim, mult, unit, comult, counit, antipode, star, haar, unitary_antipode}.
Json to_json(const FiniteQuantumGroup& g);
/// Throws ShapeMismatch (via the constructor) or BadParameters on malformed input.
QuantumGroupData quantum_group_data_from_json(const Json& j);

/// {owner: "base" | "dual", dim, coeffs}.
Json element_to_json(const AlgebraElement& x, std::string_view owner_tag);
/// Reads coefficients into the given owner; ShapeMismatch on a size mismatch.
AlgebraElement element_from_json(const Json& j, QuantumGroupPtr owner);

/// Exponents are numbers, except infinity which is written "inf".
Json exponent_to_json(double p);

/// {name, paper_anchor, lhs, rhs, residual, holds[, note]}.
Json to_json(const Check& c);
Json to_json(const CheckList& checks);

}  // namespace fqg
