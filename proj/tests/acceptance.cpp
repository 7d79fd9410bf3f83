// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fqg/catalog.hpp"
#include "fqg/duality.hpp"
#include "fqg/sharpness.hpp"
#include "fqg/suites.hpp"
#include "fqg/suq2/counterexample.hpp"

using namespace fqg;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::string> example_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.name);
  return out;
}

std::size_t count_prefix(const SuiteResult& r, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& c : r.checks.checks())
    if (c.name.rfind(prefix, 0) == 0) ++n;
  return n;
}

void report_failures(Outcome& o, const SuiteResult& r) {
  for (const auto& c : r.checks.checks())
    if (!c.holds) o.require(false, r.command + " " + r.example + " " + c.name);
}

Outcome axioms() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& name : example_names()) {
    const auto rep = verify_axioms(*make_example(name), 1e-10);
    worst = std::max(worst, rep.max_residual());
    o.require(rep.passes, name);
  }
  const double t = seconds_since(start);
  o.require(t < 5.0, "runtime");
  o.detail << "max residual " << worst << ", " << t << " s";
  return o;
}

Outcome duality() {
  Outcome o;
  double pentagon = 0.0, implementation = 0.0, plancherel = 0.0, biduality = 0.0;
  for (const auto& name : example_names()) {
    const auto dp = build_dual(make_example(name));
    const double pe = pentagon_residual(dp.unitary.w, dp.base->dim());
    const double im = implementation_residual(*dp.base, dp.unitary);
    const auto pl = plancherel_check(dp, 100, kSeed, 1e-9);
    const auto bi = biduality_check(dp, 1e-8);
    o.require(pe <= 1e-9, name + " pentagon");
    o.require(im <= 1e-10, name + " implementation");
    o.require(pl.samples == 100 && pl.max_relative_gap <= 1e-9, name + " plancherel");
    o.require(bi.residual <= 1e-8, name + " biduality");
    pentagon = std::max(pentagon, pe);
    implementation = std::max(implementation, im);
    plancherel = std::max(plancherel, pl.max_relative_gap);
    biduality = std::max(biduality, bi.residual);
  }
  o.detail << "pentagon " << pentagon << ", implementation " << implementation << ", plancherel " << plancherel
           << ", biduality " << biduality;
  return o;
}

Outcome young() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t shift_checks = 0, group_like_checks = 0;
  for (const auto& name : example_names()) {
    const auto r = young_suite(name, young_exponent_grid(), 1000, kSeed, 1e-9);
    report_failures(o, r);
    o.require(count_prefix(r, "young[") == young_exponent_grid().size(), name + " grid coverage");
    group_like_checks += count_prefix(r, "young_equality_group_like[");
    if (name == "s3-function") shift_checks = count_prefix(r, "young_equality_shift[");
  }
  o.require(shift_checks == young_exponent_grid().size(), "coset shift equality on s3-function");
  const double t = seconds_since(start);
  o.require(t < 60.0, "runtime");
  o.detail << group_like_checks << " group-like and " << shift_checks << " shift equality checks, " << t << " s";
  return o;
}

Outcome hausdorff_young() {
  Outcome o;
  std::size_t equalities = 0;
  for (const auto& name : example_names()) {
    const auto r = hausdorff_young_suite(name, {1.0, 4.0 / 3.0, 2.0}, 1000, kSeed, 1e-9);
    report_failures(o, r);
    o.require(count_prefix(r, "hausdorff_young[") == 3, name + " exponent coverage");
    const std::size_t e = count_prefix(r, "hausdorff_young_equality");
    o.require(e > 0, name + " equality at group-like projections");
    equalities += e;
  }
  o.detail << equalities << " equality checks";
  return o;
}

Outcome structures() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& name : example_names()) {
    const auto r = structures_suite(name, 1e-9, kSeed);
    report_failures(o, r);
    checks += r.checks.checks().size();
    o.require(count_prefix(r, "h[") > 0, name + " group-like projections");
    if (catalog_entry(name).dim <= 6)
      o.require(r.checks.find("biprojection_iff_group_like") != nullptr, name + " brute-force equivalence");
    if (name == "z4-function" || name == "s3-function") {
      const Check* c = r.checks.find("bishift_constructed");
      o.require(c != nullptr && c->holds, name + " bi-shift");
      o.require(count_prefix(r, "bishift.fourier_norm_equals_l1") == 1, name + " bi-shift norm identity");
    }
  }
  o.detail << checks << " checks";
  return o;
}

Outcome sharpness() {
  Outcome o;
  const auto g = make_example("z2-function");
  OptimizerOptions opts;
  opts.restarts = 32;
  opts.seed = kSeed;
  opts.structured_starts = false;
  const auto start = std::chrono::steady_clock::now();
  const auto young = estimate_best_constant_young(g, 4.0 / 3.0, 4.0 / 3.0, opts);
  const double t = seconds_since(start);
  o.require(std::abs(young.constant_estimate - 1.0) <= 1e-3, "young estimate");
  o.require(t < 60.0, "runtime");
  const auto hy = estimate_best_constant_hy(build_dual(g), 2.0, opts);
  o.require(std::abs(hy.constant_estimate - 1.0) <= 1e-9, "plancherel estimate");
  o.detail.precision(15);
  o.detail << "young " << young.constant_estimate << " in " << t << " s, p=2 " << hy.constant_estimate;
  return o;
}

Outcome suq2_exact() {
  using suq2::Rational;
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 3; ++n) {
    o.require(suq2::counterexample_report(n, Rational(1, 2)).identity_holds, "identity n=" + std::to_string(n));
    const auto suite = suq2_suite(n, Rational(1, 2), kSeed, 500);
    report_failures(o, suite);
  }
  const Rational l1 = suq2::counterexample_lower_bound(1).evaluate(Rational(1, 2));
  const Rational l2 = suq2::counterexample_lower_bound(2).evaluate(Rational(1, 2));
  o.require(l1 == Rational(80, 21), "L(1, 1/2) = 80/21");
  o.require(l2 > 10, "L(2, 1/2) > 10");
  for (const Rational mu : {Rational(1, 2), Rational(3, 4)}) {
    Rational previous = 0;
    for (int n = 1; n <= 4; ++n) {
      const Rational l = suq2::counterexample_lower_bound(n).evaluate(mu);
      o.require(l > previous, "increasing at mu=" + mu.str() + ", n=" + std::to_string(n));
      previous = l;
    }
  }
  const double t = seconds_since(start);
  o.require(t < 30.0, "runtime");
  o.detail << "L(1,1/2) = " << l1.str() << ", L(2,1/2) = " << l2.str() << ", " << t << " s";
  return o;
}

Outcome determinism() {
  Outcome o;
  std::size_t compared = 0;
  auto same = [&](const std::string& label, const std::function<SuiteResult()>& run) {
    o.require(to_document(run()).dump() == to_document(run()).dump(), label);
    ++compared;
  };
  for (const auto& name : example_names()) {
    same("verify " + name, [&] { return verify_suite(name, 1e-9, 100, kSeed); });
    same("young " + name, [&] { return young_suite(name, young_exponent_grid(), 200, kSeed, 1e-9); });
    same("hausdorff-young " + name, [&] { return hausdorff_young_suite(name, {1.0, 4.0 / 3.0, 2.0}, 200, kSeed, 1e-9); });
    same("structures " + name, [&] { return structures_suite(name, 1e-9, kSeed); });
  }
  OptimizerOptions opts;
  opts.restarts = 8;
  opts.seed = kSeed;
  same("sharpness", [&] { return sharpness_suite("z3-function", SharpnessMode::Young, 4.0 / 3.0, 1.5, opts); });
  same("hunt", [&] { return hunt_suite("z4-function", 4, kSeed, 200); });
  same("suq2", [&] { return suq2_suite(2, suq2::Rational(3, 4), kSeed, 200); });
  o.detail << compared << " suites compared";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 axiom suite", axioms},
      {"2 duality suite", duality},
      {"3 young suite", young},
      {"4 hausdorff-young suite", hausdorff_young},
      {"5 structure suite", structures},
      {"6 sharpness", sharpness},
      {"7 su_mu(2) exact suite", suq2_exact},
      {"8 determinism", determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.label << ": " << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
