#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fqg/catalog.hpp"
#include "fqg/error.hpp"
#include "fqg/lpconv.hpp"
#include "fqg/suites.hpp"

namespace {

using fqg::Json;
using fqg::SuiteResult;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

/// Accepts "4/3", "1.5", "inf".
double parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity") return fqg::kInfinity;
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used == text.size()) return v;
    } else {
      const double num = std::stod(text.substr(0, slash), &used);
      const std::string rest = text.substr(slash + 1);
      std::size_t used_den = 0;
      const double den = std::stod(rest, &used_den);
      if (used == slash && used_den == rest.size() && den != 0.0) return num / den;
    }
  } catch (const std::exception&) {
  }
  throw fqg::Error(fqg::ErrorKind::BadFlags, "cannot parse exponent '" + text + "'");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QG_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw fqg::Error(fqg::ErrorKind::BadFlags, std::string("QG_SEED is not an unsigned integer: ") + env);
  }
  return 42;
}

std::vector<std::string> example_names(const std::string& only) {
  if (!only.empty()) {
    fqg::catalog_entry(only);  // throws UnknownExample
    return {only};
  }
  std::vector<std::string> out;
  for (const auto& e : fqg::catalog()) out.push_back(e.name);
  return out;
}

void summarize(const SuiteResult& r) {
  std::size_t held = 0;
  for (const auto& c : r.checks.checks()) held += c.holds ? 1 : 0;
  std::cerr << r.command << (r.example.empty() ? "" : " " + r.example) << ": " << held << "/" << r.checks.checks().size()
            << " checks hold\n";
  for (const auto& c : r.checks.checks())
    if (!c.holds) std::cerr << "  FAILED " << c.name << " (" << c.anchor << "): residual " << c.residual << "\n";
}

/// Merges several suites into one document; check names gain a
/// "command/example/" prefix.
SuiteResult merge(const std::vector<SuiteResult>& parts, std::uint64_t seed, Json params) {
  SuiteResult all;
  all.command = "all";
  all.seed = seed;
  all.params = std::move(params);
  for (const auto& part : parts) {
    const std::string prefix = part.command + "/" + (part.example.empty() ? "" : part.example + "/");
    for (auto c : part.checks.checks()) {
      c.name = prefix + c.name;
      all.checks.add(std::move(c));
    }
    all.details[prefix.substr(0, prefix.size() - 1)] = part.details;
  }
  return all;
}

struct Options {
  std::string example;
  std::string output;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  bool timing = false;
  unsigned threads = 0;
  std::size_t samples = 0;
  std::string p, q;
  std::string mode = "young";
  std::size_t restarts = 32;
  std::size_t iters = 2000;
  bool no_structured = false;
  std::size_t budget = 32;
  std::size_t hunt_iters = 400;
  int n = 1;
  long long mu_num = 1;
  long long mu_den = 2;
  bool json = false;
  std::size_t words = 500;
};

int emit(const Json& doc, const Options& o) {
  const std::string text = doc.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw fqg::Error(fqg::ErrorKind::BadFlags, "cannot open output file " + o.output);
    f << text;
  }
  return kExitOk;
}

int run_suites(const std::vector<SuiteResult>& parts, const Options& o, std::optional<double> elapsed, Json params) {
  for (const auto& p : parts) summarize(p);
  if (parts.size() == 1) {
    emit(fqg::to_document(parts.front(), elapsed), o);
    return parts.front().all_hold() ? kExitOk : kExitCheckFailed;
  }
  const SuiteResult all = merge(parts, o.seed, std::move(params));
  emit(fqg::to_document(all, elapsed), o);
  return all.all_hold() ? kExitOk : kExitCheckFailed;
}

std::vector<std::pair<double, double>> young_exponents(const Options& o) {
  if (o.p.empty() && o.q.empty()) return fqg::young_exponent_grid();
  if (o.p.empty() || o.q.empty()) throw fqg::Error(fqg::ErrorKind::BadFlags, "--p and --q go together");
  return {{parse_exponent(o.p), parse_exponent(o.q)}};
}

std::vector<double> hy_exponents(const Options& o) {
  if (o.p.empty()) return {1.0, 4.0 / 3.0, 2.0};
  return {parse_exponent(o.p)};
}

fqg::suq2::Rational mu_value(const Options& o) {
  if (o.mu_den == 0) throw fqg::Error(fqg::ErrorKind::BadFlags, "--mu-den must be nonzero");
  return fqg::suq2::Rational(o.mu_num, o.mu_den);
}

fqg::OptimizerOptions optimizer(const Options& o) {
  fqg::OptimizerOptions opt;
  opt.restarts = o.restarts;
  opt.iters = o.iters;
  opt.seed = o.seed;
  opt.structured_starts = !o.no_structured;
  opt.threads = o.threads;
  return opt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic analysis on finite quantum groups: verification suites, best-constant searches and exact "
               "SU_mu(2) computations. Every command writes one JSON document; a human summary goes to stderr.\n"
               "Exit codes: 0 all checks hold, 2 a check failed, 1 usage or construction error."};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  try {
    o.seed = default_seed();
  } catch (const fqg::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  app.add_option("--tol", o.tol, "Residual tolerance for identity checks")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for every random draw (default 42, or $QG_SEED)")->capture_default_str();
  app.add_option("-o,--output", o.output, "Write the JSON document here instead of stdout");
  app.add_flag("--timing", o.timing, "Record elapsed_ms (otherwise null, keeping output reproducible)");
  app.add_option("--threads", o.threads, "Worker threads for restarts (0 = one per core)")->capture_default_str();

  auto* cat = app.add_subcommand("catalog", "List the built-in examples, or dump one as structure constants");
  cat->add_option("--example", o.example, "Dump this example's structure constants");

  auto* verify = app.add_subcommand("verify", "Axioms of the example and of its dual, pentagon, Plancherel, biduality");
  verify->add_option("--example", o.example, "Catalog name")->required();
  verify->add_option("--samples", o.samples, "Random elements for the Plancherel check (default 100)");

  auto* young = app.add_subcommand("young", "Young's inequality on random pairs, with equality cases");
  young->add_option("--example", o.example, "Catalog name")->required();
  young->add_option("--p", o.p, "Exponent p, e.g. 4/3 (default: grid over {1, 4/3, 3/2, 2})");
  young->add_option("--q", o.q, "Exponent q");
  young->add_option("--samples", o.samples, "Random pairs (default 1000)");

  auto* hy = app.add_subcommand("hausdorff-young", "Hausdorff-Young on random elements, with equality cases");
  hy->add_option("--example", o.example, "Catalog name")->required();
  hy->add_option("--p", o.p, "Exponent p in [1, 2] (default: 1, 4/3 and 2)");
  hy->add_option("--samples", o.samples, "Random elements (default 1000)");

  auto* st = app.add_subcommand("structures", "Group-like projections, biprojections, shifts and bi-shifts");
  st->add_option("--example", o.example, "Catalog name")->required();

  auto* sharp = app.add_subcommand("sharpness", "Estimate a best constant by multi-start gradient ascent");
  sharp->add_option("--example", o.example, "Catalog name")->required();
  sharp->add_option("--mode", o.mode, "young or hausdorff-young")
      ->check(CLI::IsMember({"young", "hausdorff-young"}))
      ->capture_default_str();
  sharp->add_option("--p", o.p, "Exponent p (default 4/3)");
  sharp->add_option("--q", o.q, "Exponent q for young (default 4/3)");
  sharp->add_option("--restarts", o.restarts, "Random restarts")->capture_default_str();
  sharp->add_option("--iters", o.iters, "Iteration cap per restart")->capture_default_str();
  sharp->add_flag("--no-structured-starts", o.no_structured, "Skip the starts at group-like projections");

  auto* hunt = app.add_subcommand("hunt", "Search for a biprojection that is not group-like (evidence only)");
  hunt->add_option("--example", o.example, "Catalog name")->required();
  hunt->add_option("--budget", o.budget, "Random starts")->capture_default_str();
  hunt->add_option("--iters", o.hunt_iters, "Iteration cap per start")->capture_default_str();

  auto* su = app.add_subcommand("suq2", "Exact SU_mu(2) counterexample and algebra checks");
  su->add_option("--n", o.n, "Exponent n in x = c*^(2n), y = c^(2n), 1..4")->capture_default_str();
  su->add_option("--mu-num", o.mu_num, "Numerator of mu")->capture_default_str();
  su->add_option("--mu-den", o.mu_den, "Denominator of mu")->capture_default_str();
  su->add_flag("--json", o.json, "Accepted for scripts; JSON is always written");
  su->add_option("--words", o.words, "Random words for the confluence check")->capture_default_str();

  auto* all = app.add_subcommand("all", "verify, young, hausdorff-young and structures on every example (or one), "
                                        "the z2-function sharpness checks, and suq2 for n = 1..3 at mu = 1/2");
  all->add_option("--example", o.example, "Restrict the per-example suites to one catalog name");
  all->add_option("--samples", o.samples, "Random samples per suite (default 1000; 100 for Plancherel)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&]() -> std::optional<double> {
    if (!o.timing) return std::nullopt;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  auto samples_or = [&](std::size_t fallback) { return o.samples == 0 ? fallback : o.samples; };

  try {
    if (cat->parsed()) {
      Json doc;
      doc["tool_version"] = std::string(fqg::kToolVersion);
      doc["command"] = "catalog";
      if (!o.example.empty()) {
        doc["example"] = o.example;
        doc["quantum_group"] = fqg::to_json(*fqg::make_example(o.example));
      } else {
        Json list = Json::array();
        for (const auto& e : fqg::catalog())
          list.push_back({{"name", e.name}, {"dim", e.dim}, {"commutative", e.commutative},
                          {"cocommutative", e.cocommutative}});
        doc["examples"] = list;
      }
      return emit(doc, o);
    }
    std::vector<SuiteResult> parts;
    Json params;
    if (verify->parsed()) {
      parts.push_back(fqg::verify_suite(o.example, o.tol, samples_or(100), o.seed));
    } else if (young->parsed()) {
      parts.push_back(fqg::young_suite(o.example, young_exponents(o), samples_or(1000), o.seed, o.tol));
    } else if (hy->parsed()) {
      parts.push_back(fqg::hausdorff_young_suite(o.example, hy_exponents(o), samples_or(1000), o.seed, o.tol));
    } else if (st->parsed()) {
      parts.push_back(fqg::structures_suite(o.example, o.tol, o.seed));
    } else if (sharp->parsed()) {
      const bool is_young = o.mode == "young";
      if (!is_young && !o.q.empty()) throw fqg::Error(fqg::ErrorKind::BadFlags, "--q applies to --mode young only");
      const double p = o.p.empty() ? 4.0 / 3.0 : parse_exponent(o.p);
      const double q = o.q.empty() ? 4.0 / 3.0 : parse_exponent(o.q);
      const auto mode = is_young ? fqg::SharpnessMode::Young : fqg::SharpnessMode::HausdorffYoung;
      parts.push_back(fqg::sharpness_suite(o.example, mode, p, q, optimizer(o)));
    } else if (hunt->parsed()) {
      parts.push_back(fqg::hunt_suite(o.example, o.budget, o.seed, o.hunt_iters));
    } else if (su->parsed()) {
      parts.push_back(fqg::suq2_suite(o.n, mu_value(o), o.seed, o.words));
    } else if (all->parsed()) {
      for (const auto& name : example_names(o.example)) {
        parts.push_back(fqg::verify_suite(name, o.tol, samples_or(100), o.seed));
        parts.push_back(fqg::young_suite(name, fqg::young_exponent_grid(), samples_or(1000), o.seed, o.tol));
        parts.push_back(fqg::hausdorff_young_suite(name, {1.0, 4.0 / 3.0, 2.0}, samples_or(1000), o.seed, o.tol));
        parts.push_back(fqg::structures_suite(name, o.tol, o.seed));
      }
      const fqg::OptimizerOptions opt = optimizer(o);
      parts.push_back(fqg::sharpness_suite("z2-function", fqg::SharpnessMode::Young, 4.0 / 3.0, 4.0 / 3.0, opt));
      parts.push_back(fqg::sharpness_suite("z2-function", fqg::SharpnessMode::HausdorffYoung, 2.0, 2.0, opt));
      for (int n = 1; n <= 3; ++n) parts.push_back(fqg::suq2_suite(n, fqg::suq2::Rational(1, 2), o.seed, o.words));
      params = {{"example", o.example.empty() ? Json() : Json(o.example)},
                {"samples", o.samples == 0 ? Json() : Json(o.samples)},
                {"tol", o.tol}};
    }
    return run_suites(parts, o, elapsed(), std::move(params));
  } catch (const fqg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
