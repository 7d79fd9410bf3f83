#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqg/io.hpp"
#include "fqg/report.hpp"
#include "fqg/sharpness.hpp"
#include "fqg/suq2/scalar.hpp"

namespace fqg {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Outcome of one verification suite, ready to serialise.
struct SuiteResult {
  std::string command;
  std::string example;  // empty when the suite is not tied to one example
  Json params = Json::object();
  std::uint64_t seed = 0;
  CheckList checks;
  Json details = Json::object();

  bool all_hold() const { return checks.all_hold(); }
};

/// Every axiom residual at tol, plus the duality checks: unitarity, pentagon,
/// implementation of Delta by W, Plancherel on `samples` random elements,
/// biduality and the axioms of the dual.
SuiteResult verify_suite(const std::string& example, double tol, std::size_t samples, std::uint64_t seed);

/// (p, q) in {1, 4/3, 3/2, 2}^2.
std::vector<std::pair<double, double>> young_exponent_grid();

/// Young's inequality on `samples` random pairs per exponent pair, with
/// equality at (h, h) for every group-like h and at (R(x), x) for every
/// certified left shift x (examples of dimension <= 6).
SuiteResult young_suite(const std::string& example, const std::vector<std::pair<double, double>>& exponents,
                        std::size_t samples, std::uint64_t seed, double tol);

/// Hausdorff-Young on random elements, and the closed forms
/// ||h||_p = phi(h)^(1/p), ||F(h)||_{p'} = phi(h)^((p'-1)/p') at group-like h.
SuiteResult hausdorff_young_suite(const std::string& example, const std::vector<double>& exponents,
                                  std::size_t samples, std::uint64_t seed, double tol);

/// Group-like projections, biprojections, shifts and bi-shifts.
SuiteResult structures_suite(const std::string& example, double tol, std::uint64_t seed);

enum class SharpnessMode { Young, HausdorffYoung };

SuiteResult sharpness_suite(const std::string& example, SharpnessMode mode, double p, double q,
                            const OptimizerOptions& options);

SuiteResult hunt_suite(const std::string& example, std::size_t budget, std::uint64_t seed, std::size_t iters);

/// Exact SU_mu(2) checks: counterexample identity and bound at (n, mu), plus
/// normal-form confluence, *-compatibility, coassociativity, Haar invariance
/// and the antipode axiom on seeded or exhaustive probe sets.
SuiteResult suq2_suite(int n, const suq2::Rational& mu, std::uint64_t seed, std::size_t random_words);

/// {tool_version, command, example, params, checks, seed, elapsed_ms, details}.
/// elapsed_ms is null unless given, so repeated runs serialise identically.
Json to_document(const SuiteResult& r, std::optional<double> elapsed_ms = std::nullopt);

}  // namespace fqg
