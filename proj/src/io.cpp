#include "fqg/io.hpp"

#include <cmath>

#include "fqg/error.hpp"

namespace fqg {

namespace {

/// Non-finite doubles would be written as null and lost on the way back.
Json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::BadParameters, std::string("missing field ") + key);
  return j.at(key);
}

}  // namespace

Json to_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json to_json(std::span<const Complex> v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

Json to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.entries().subspan(r * m.cols(), m.cols())));
  return out;
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorKind::BadParameters, "complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::BadParameters, "expected an array of complex numbers");
  CVector out;
  out.reserve(j.size());
  for (const auto& z : j) out.push_back(complex_from_json(z));
  return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::BadParameters, "expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (row.size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
    for (const auto& z : row) entries.push_back(complex_from_json(z));
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

Json to_json(const FiniteQuantumGroup& g) {
  const auto& d = g.data();
  Json out;
  out["name"] = d.name;
  out["dim"] = d.dim;
  out["mult"] = to_json(std::span<const Complex>(d.mult));
  out["unit"] = to_json(std::span<const Complex>(d.unit));
  out["comult"] = to_json(d.comult);
  out["counit"] = to_json(std::span<const Complex>(d.counit));
  out["antipode"] = to_json(d.antipode);
  out["star"] = to_json(d.star);
  out["haar"] = to_json(std::span<const Complex>(d.haar));
  out["unitary_antipode"] = to_json(d.unitary_antipode);
  return out;
}

QuantumGroupData quantum_group_data_from_json(const Json& j) {
  QuantumGroupData d;
  d.name = j.value("name", std::string());
  const Json& dim = require(j, "dim");
  if (!dim.is_number_unsigned()) throw Error(ErrorKind::BadParameters, "dim must be a non-negative integer");
  d.dim = dim.get<std::size_t>();
  d.mult = vector_from_json(require(j, "mult"));
  d.unit = vector_from_json(require(j, "unit"));
  d.comult = matrix_from_json(require(j, "comult"));
  d.counit = vector_from_json(require(j, "counit"));
  d.antipode = matrix_from_json(require(j, "antipode"));
  d.star = matrix_from_json(require(j, "star"));
  d.haar = vector_from_json(require(j, "haar"));
  d.unitary_antipode = j.contains("unitary_antipode") ? matrix_from_json(j.at("unitary_antipode")) : d.antipode;
  return d;
}

Json element_to_json(const AlgebraElement& x, std::string_view owner_tag) {
  Json out;
  out["owner"] = std::string(owner_tag);
  out["dim"] = x.dim();
  out["coeffs"] = to_json(std::span<const Complex>(x.coeffs()));
  return out;
}

AlgebraElement element_from_json(const Json& j, QuantumGroupPtr owner) {
  CVector c = vector_from_json(require(j, "coeffs"));
  if (c.size() != owner->dim()) throw Error(ErrorKind::ShapeMismatch, "element has the wrong dimension");
  return AlgebraElement(std::move(owner), std::move(c));
}

Json exponent_to_json(double p) { return number(p); }

Json to_json(const Check& c) {
  Json out;
  out["name"] = c.name;
  out["paper_anchor"] = c.anchor;
  out["lhs"] = number(c.lhs);
  out["rhs"] = number(c.rhs);
  out["residual"] = number(c.residual);
  out["holds"] = c.holds;
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json to_json(const CheckList& checks) {
  Json out = Json::array();
  for (const auto& c : checks.checks()) out.push_back(to_json(c));
  return out;
}

}  // namespace fqg
