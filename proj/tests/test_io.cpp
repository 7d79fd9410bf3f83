#include "doctest.h"

#include <cmath>
#include <limits>

#include "fqg/catalog.hpp"
#include "fqg/error.hpp"
#include "fqg/io.hpp"
#include "fqg/lpconv.hpp"
#include "fqg/suites.hpp"
#include "helpers.hpp"

using namespace fqg;

TEST_SUITE("io") {

TEST_CASE("quantum group data survives a text round trip bit for bit") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const auto g = make_example(e.name);
    const Json j = Json::parse(to_json(*g).dump());
    const QuantumGroupData d = quantum_group_data_from_json(j);
    const auto& o = g->data();
    CHECK(d.name == o.name);
    CHECK(d.dim == o.dim);
    CHECK(d.mult == o.mult);
    CHECK(d.unit == o.unit);
    CHECK(d.comult == o.comult);
    CHECK(d.counit == o.counit);
    CHECK(d.antipode == o.antipode);
    CHECK(d.star == o.star);
    CHECK(d.haar == o.haar);
    CHECK(d.unitary_antipode == o.unitary_antipode);
    CHECK(verify_axioms(FiniteQuantumGroup(d), 1e-10).passes);
  }
}

TEST_CASE("awkward doubles round trip exactly") {
  const CVector v{Complex(0.1, -1.0 / 3.0), Complex(std::nextafter(1.0, 2.0), 5e-324),
                  Complex(std::numeric_limits<double>::max(), -0.0)};
  const CVector back = vector_from_json(Json::parse(to_json(v).dump()));
  CHECK(back == v);
}

TEST_CASE("elements carry their owner tag") {
  const auto g = make_example("z3-function");
  const AlgebraElement x(g, CVector{1.0, Complex(0.0, 2.0), -0.5});
  const Json j = element_to_json(x, "dual");
  CHECK(j["owner"] == "dual");
  CHECK(j["dim"] == 3);
  CHECK(element_from_json(j, g).coeffs() == x.coeffs());
  try {
    (void)element_from_json(j, make_example("z2-function"));
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ShapeMismatch);
  }
}

TEST_CASE("missing fields are reported") {
  Json j = to_json(*make_example("z2-function"));
  j.erase("haar");
  try {
    (void)quantum_group_data_from_json(j);
    FAIL("expected BadParameters");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadParameters);
  }
}

TEST_CASE("exponents and checks") {
  CHECK(exponent_to_json(kInfinity) == "inf");
  CHECK(exponent_to_json(2.0) == 2.0);
  Check c{"name", "a = b", 1.0, 1.0, 0.0, true, {}};
  const Json j = to_json(c);
  for (const char* key : {"name", "paper_anchor", "lhs", "rhs", "residual", "holds"}) CHECK(j.contains(key));
  CHECK_FALSE(j.contains("note"));
  c.residual = std::numeric_limits<double>::infinity();
  CHECK(to_json(c)["residual"] == "inf");
}

TEST_CASE("suite documents have the fixed schema and are reproducible") {
  const SuiteResult r = verify_suite("z2-function", 1e-9, 10, 42);
  CHECK(r.all_hold());
  const Json doc = to_document(r);
  for (const char* key : {"tool_version", "command", "example", "params", "checks", "seed", "elapsed_ms"})
    CHECK(doc.contains(key));
  CHECK(doc["elapsed_ms"].is_null());
  CHECK(doc["tool_version"] == "1.0.0");
  CHECK(doc.dump() == to_document(verify_suite("z2-function", 1e-9, 10, 42)).dump());
  CHECK(to_document(r, 12.5)["elapsed_ms"] == 12.5);
}

}
