#include "fqg/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "fqg/catalog.hpp"
#include "fqg/duality.hpp"
#include "fqg/error.hpp"
#include "fqg/lpconv.hpp"
#include "fqg/random.hpp"
#include "fqg/structures.hpp"
#include "fqg/suq2/counterexample.hpp"

namespace fqg {

namespace {

constexpr std::size_t kSmallDim = 6;  // brute-force projection searches stay below this
constexpr double kConvolutionSquareTol = 1e-12;
constexpr double kBidualityTol = 1e-8;
constexpr double kYoungConstantCeiling = 1e-6;

std::string exponent_label(double p) {
  if (std::isinf(p)) return "inf";
  const std::pair<double, const char*> known[] = {{1.0, "1"}, {4.0 / 3.0, "4/3"}, {1.5, "3/2"}, {2.0, "2"},
                                                  {3.0, "3"}, {4.0, "4"}};
  for (const auto& [v, s] : known)
    if (std::abs(p - v) < 1e-12) return s;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", p);
  return buf;
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

std::string axiom_statement(const std::string& name) {
  static const std::map<std::string, std::string> statements = {
      {"associativity", "(xy)z = x(yz)"},
      {"unit", "1x = x1 = x"},
      {"coassociativity", "(Delta (x) id)Delta = (id (x) Delta)Delta"},
      {"comultiplication_homomorphism", "Delta(xy) = Delta(x)Delta(y)"},
      {"comultiplication_star", "Delta(x^*) = Delta(x)^*"},
      {"counit", "(epsilon (x) id)Delta = (id (x) epsilon)Delta = id"},
      {"antipode", "m(S (x) id)Delta = m(id (x) S)Delta = epsilon(.)1"},
      {"star_involution", "x^** = x and (xy)^* = y^* x^*"},
      {"haar_left_invariance", "(id (x) phi)Delta(x) = phi(x)1"},
      {"haar_right_invariance", "(phi (x) id)Delta(x) = phi(x)1"},
      {"haar_normalization", "phi(1) = 1"},
      {"haar_positivity", "phi(x^* x) >= 0"},
      {"haar_faithfulness", "phi(x^* x) = 0 only for x = 0"},
      {"haar_traciality", "phi(xy) = phi(yx)"},
      {"antipode_squared_identity", "S^2 = id (Kac type)"},
      {"unitary_antipode_equals_antipode", "R = S (trivial scaling group)"},
  };
  const auto it = statements.find(name);
  return it == statements.end() ? name : it->second;
}

/// Folds many check lists that share names into one check per name: worst
/// residual, holds only if every instance holds.
void add_aggregate(CheckList& out, const std::string& prefix, const std::vector<CheckList>& lists) {
  std::vector<std::string> order;
  std::map<std::string, Check> merged;
  std::map<std::string, std::size_t> counts;
  for (const auto& list : lists)
    for (const auto& c : list.checks()) {
      auto [it, inserted] = merged.try_emplace(c.name, c);
      if (inserted) {
        order.push_back(c.name);
      } else {
        const bool held = it->second.holds && c.holds;
        if (c.residual > it->second.residual) it->second = c;
        it->second.holds = held;
      }
      ++counts[c.name];
    }
  for (const auto& name : order) {
    Check c = merged[name];
    c.name = prefix + name;
    const std::string over = "worst of " + std::to_string(counts[name]);
    c.note = c.note.empty() ? over : over + "; " + c.note;
    out.add(std::move(c));
  }
}

Check inequality_check(std::string name, std::string anchor, double worst_ratio, bool all_hold) {
  return {std::move(name), std::move(anchor), worst_ratio, 1.0, worst_ratio - 1.0, all_hold, {}};
}

AlgebraElement random_element(Rng& rng, const QuantumGroupPtr& g) { return AlgebraElement(g, rng.ginibre(g->dim())); }

std::vector<AlgebraElement> left_shift_pool(const QuantumGroupPtr& g, std::uint64_t seed) {
  return g->dim() <= kSmallDim ? projection_candidates(g, seed) : std::vector<AlgebraElement>{};
}

}  // namespace

SuiteResult verify_suite(const std::string& example, double tol, std::size_t samples, std::uint64_t seed) {
  SuiteResult r;
  r.command = "verify";
  r.example = example;
  r.seed = seed;
  r.params = {{"tol", tol}, {"samples", samples}};
  const QuantumGroupPtr g = make_example(example);

  const AxiomReport axioms = verify_axioms(*g, tol);
  for (const auto& a : axioms.axioms) r.checks.identity(a.name, axiom_statement(a.name), a.residual, tol);
  r.details["gram_min_eigenvalue"] = axioms.gram_min_eigenvalue;

  const DualPair dp = build_dual(g);
  const std::size_t n = g->dim();
  r.checks.identity("unitarity", "W^* W = W W^* = 1", dp.unitary.unitarity_residual, tol);
  r.checks.identity("pentagon", "W12 W13 W23 = W23 W12", pentagon_residual(dp.unitary.w, n), tol);
  r.checks.identity("comultiplication_implemented", "Delta(x) = W^*(1 (x) x)W", implementation_residual(*g, dp.unitary),
                    tol);
  const PlancherelReport pl = plancherel_check(dp, samples, seed, tol);
  r.checks.identity("plancherel", "phi-hat(F(x)^* F(x)) = phi(x^* x)", pl.max_relative_gap, tol);
  {
    Rng rng(seed ^ 0x5851f42d4c957f2dULL);
    double worst = 0.0;
    for (std::size_t s = 0; s < std::min<std::size_t>(samples, 20); ++s) {
      const AlgebraElement x = random_element(rng, g), y = random_element(rng, g);
      worst = std::max(worst, convolution_theorem_check(dp, x, y, tol).residual);
    }
    r.checks.identity("convolution_theorem", "F(x * y) = F(x) F(y)", worst, tol);
  }
  const BidualityReport bi = biduality_check(dp, kBidualityTol);
  r.checks.identity("biduality", "the dual of the dual is the base", bi.residual, kBidualityTol);
  const AxiomReport dual_axioms = verify_axioms(*dp.dual, tol);
  Check& d = r.checks.identity("dual_axioms", "the dual satisfies every axiom above", dual_axioms.max_residual(), tol);
  if (!dual_axioms.passes) d.holds = false;
  r.details["dual_weight_total"] = dp.dual_weight_total;
  r.details["plancherel_weight_residual"] = dp.plancherel_residual;
  return r;
}

std::vector<std::pair<double, double>> young_exponent_grid() {
  const double values[] = {1.0, 4.0 / 3.0, 1.5, 2.0};
  std::vector<std::pair<double, double>> out;
  for (double p : values)
    for (double q : values) out.emplace_back(p, q);
  return out;
}

SuiteResult young_suite(const std::string& example, const std::vector<std::pair<double, double>>& exponents,
                        std::size_t samples, std::uint64_t seed, double tol) {
  SuiteResult r;
  r.command = "young";
  r.example = example;
  r.seed = seed;
  Json ex = Json::array();
  for (const auto& [p, q] : exponents)
    ex.push_back({exponent_to_json(p), exponent_to_json(q), exponent_to_json(young_exponent(p, q))});
  r.params = {{"exponents", ex}, {"samples", samples}, {"tol", tol}};

  const QuantumGroupPtr g = make_example(example);
  const WeightedLpSpace space = WeightedLpSpace::base(g);
  std::vector<double> worst(exponents.size(), 0.0);
  std::vector<bool> ok(exponents.size(), true);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const AlgebraElement x = random_element(rng, g), y = random_element(rng, g);
    const LpSpectrum sx = space.spectrum(x), sy = space.spectrum(y), sxy = space.spectrum(convolve(x, y));
    for (std::size_t k = 0; k < exponents.size(); ++k) {
      const auto [p, q] = exponents[k];
      const double rr = young_exponent(p, q);
      const InequalityReport rep = make_inequality_report(sxy.norm(rr), sx.norm(p) * sy.norm(q), p, q, rr);
      worst[k] = std::max(worst[k], rep.ratio);
      ok[k] = ok[k] && rep.holds;
    }
  }
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    const auto [p, q] = exponents[k];
    r.checks.add(inequality_check("young[p=" + exponent_label(p) + ",q=" + exponent_label(q) + "]",
                                  "||x * y||_r <= ||x||_p ||y||_q", worst[k], ok[k]));
  }

  // equality cases: (h, h) for group-like h and (R(x), x) for left shifts x of h
  const auto group_like = enumerate_group_like_projections(g);
  const auto pool = left_shift_pool(g, seed);
  std::vector<std::pair<AlgebraElement, AlgebraElement>> shift_pairs;
  for (const auto& h : group_like)
    for (const auto& x : certified_left_shifts(h, pool)) shift_pairs.emplace_back(x.unitary_antipode(), x);
  auto equality = [&](const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs, const std::string& label,
                      const std::string& anchor) {
    if (pairs.empty()) return;
    for (const auto& [p, q] : exponents) {
      const double rr = young_exponent(p, q);
      double gap = 0.0;
      for (const auto& [x, y] : pairs) {
        const double lhs = space.norm(convolve(x, y), rr), rhs = space.norm(x, p) * space.norm(y, q);
        gap = std::max(gap, relative_gap(lhs, rhs));
      }
      Check& c = r.checks.identity(label + "[p=" + exponent_label(p) + ",q=" + exponent_label(q) + "]", anchor, gap, tol);
      c.note = "worst of " + std::to_string(pairs.size());
    }
  };
  std::vector<std::pair<AlgebraElement, AlgebraElement>> diagonal;
  for (const auto& h : group_like) diagonal.emplace_back(h, h);
  equality(diagonal, "young_equality_group_like", "||h * h||_r = ||h||_p ||h||_q");
  equality(shift_pairs, "young_equality_shift", "||R(x) * x||_r = ||R(x)||_p ||x||_q");
  r.details["group_like_projections"] = group_like.size();
  r.details["left_shifts"] = shift_pairs.size();
  return r;
}

SuiteResult hausdorff_young_suite(const std::string& example, const std::vector<double>& exponents,
                                  std::size_t samples, std::uint64_t seed, double tol) {
  SuiteResult r;
  r.command = "hausdorff-young";
  r.example = example;
  r.seed = seed;
  Json ex = Json::array();
  for (double p : exponents) ex.push_back(exponent_to_json(p));
  r.params = {{"exponents", ex}, {"samples", samples}, {"tol", tol}};

  const QuantumGroupPtr g = make_example(example);
  const DualPair dp = build_dual(g);
  const WeightedLpSpace base = WeightedLpSpace::base(g);
  const WeightedLpSpace dual = WeightedLpSpace::dual(dp);
  for (double p : exponents)
    if (!(p >= 1.0 && p <= 2.0)) throw Error(ErrorKind::BadExponents, "Hausdorff-Young needs p in [1, 2]");

  std::vector<double> worst(exponents.size(), 0.0);
  std::vector<bool> ok(exponents.size(), true);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const AlgebraElement x = random_element(rng, g);
    const LpSpectrum sx = base.spectrum(x), sf = dual.spectrum(fourier_element(dp, x));
    for (std::size_t k = 0; k < exponents.size(); ++k) {
      const double p = exponents[k], pc = conjugate_exponent(p);
      const InequalityReport rep = make_inequality_report(sf.norm(pc), sx.norm(p), p, pc, pc);
      worst[k] = std::max(worst[k], rep.ratio);
      ok[k] = ok[k] && rep.holds;
    }
  }
  for (std::size_t k = 0; k < exponents.size(); ++k)
    r.checks.add(inequality_check("hausdorff_young[p=" + exponent_label(exponents[k]) + "]",
                                  "||F(x)||_{p'} <= ||x||_p", worst[k], ok[k]));

  const auto group_like = enumerate_group_like_projections(g);
  for (double p : exponents) {
    const double pc = conjugate_exponent(p);
    const double dual_power = std::isinf(pc) ? 1.0 : (pc - 1.0) / pc;
    double gap_norm = 0.0, gap_fourier = 0.0, gap_ratio = 0.0;
    for (const auto& h : group_like) {
      const double phi_h = h.haar().real();
      const double nh = base.norm(h, p), nf = dual.norm(fourier_element(dp, h), pc);
      gap_norm = std::max(gap_norm, relative_gap(nh, std::pow(phi_h, 1.0 / p)));
      gap_fourier = std::max(gap_fourier, relative_gap(nf, std::pow(phi_h, dual_power)));
      gap_ratio = std::max(gap_ratio, relative_gap(nf, nh));
    }
    const std::string label = "[p=" + exponent_label(p) + "]";
    r.checks.identity("group_like_norm" + label, "||h||_p = phi(h)^(1/p)", gap_norm, tol);
    r.checks.identity("group_like_fourier_norm" + label, "||F(h)||_{p'} = phi(h)^((p'-1)/p')", gap_fourier, tol);
    r.checks.identity("hausdorff_young_equality" + label, "||F(h)||_{p'} = ||h||_p", gap_ratio, tol);
  }
  r.details["group_like_projections"] = group_like.size();
  return r;
}

SuiteResult structures_suite(const std::string& example, double tol, std::uint64_t seed) {
  SuiteResult r;
  r.command = "structures";
  r.example = example;
  r.seed = seed;
  r.params = {{"tol", tol}};
  const QuantumGroupPtr g = make_example(example);
  const DualPair dp = build_dual(g);
  const auto group_like = enumerate_group_like_projections(g);

  Json glp = Json::array();
  for (std::size_t i = 0; i < group_like.size(); ++i) {
    const AlgebraElement& h = group_like[i];
    const std::string prefix = "h[" + std::to_string(i) + "].";
    CheckList local;
    local.append(is_group_like_projection(h, tol).residuals);
    local.append(verify_glp_properties(h, tol));
    const Complex phi_h = h.haar();
    local.identity("convolution_square", "h * h = phi(h) h", max_abs_diff(convolve(h, h), h * phi_h),
                   kConvolutionSquareTol);
    local.append(glpbi_check(dp, h, tol));
    const BiprojectionReport bip = is_biprojection(dp, h, tol);
    Check& b = local.identity("biprojection", "h and F(h)/c are projections", bip.projection_residual, tol);
    b.holds = bip.biprojection;
    b.lhs = bip.multiple;
    b.rhs = phi_h.real();
    for (auto c : local.checks()) {
      c.name = prefix + c.name;
      r.checks.add(std::move(c));
    }
    Json entry = element_to_json(h, "base");
    entry["phi"] = phi_h.real();
    glp.push_back(std::move(entry));
  }
  r.details["group_like"] = std::move(glp);

  if (g->dim() > kSmallDim) {
    r.details["brute_force"] = "skipped: dimension above " + std::to_string(kSmallDim);
    return r;
  }
  const auto candidates = projection_candidates(g, seed);
  const EquivalenceReport eq = biprojection_iff_grouplike(dp, candidates, tol);
  Check c{"biprojection_iff_group_like", "h is a biprojection iff h is a group-like projection",
          static_cast<double>(eq.entries.size()), 0.0, static_cast<double>(eq.disagreements.size()), eq.holds(), {}};
  c.note = "lhs = projections tested, residual = disagreements";
  r.checks.add(std::move(c));

  std::vector<CheckList> shift_lists, bipartial_lists, bishift_lists;
  std::size_t shifts = 0, bishifts = 0, vanishing = 0;
  const auto dual_candidates = projection_candidates(dp.dual, seed);
  for (const auto& h : group_like) {
    const auto xs = certified_left_shifts(h, candidates, tol);
    for (const auto& x : xs) {
      shift_lists.push_back(shift_check(x, h, Side::Left, tol).checks);
      bipartial_lists.push_back(bipartial_isometry_check(dp, x, h, tol));
    }
    shifts += xs.size();
    const AlgebraElement h_tilde = dual_element(dp, range_projection(dp, fourier(dp, h)));
    const auto x_tildes = certified_left_shifts(h_tilde, dual_candidates, tol);
    for (const auto& xh : xs)
      for (const auto& xt : x_tildes)
        for (std::size_t j = 0; j < g->dim(); ++j) {
          const BishiftContext ctx{h, xh, AlgebraElement::basis(g, j), h_tilde, xt};
          const AlgebraElement x = bishift_construct(dp, ctx, tol);
          if (max_abs(x.coeffs()) <= tol) {
            ++vanishing;
            continue;
          }
          bishift_lists.push_back(bishift_theorem_check(dp, x, tol));
          ++bishifts;
        }
  }
  add_aggregate(r.checks, "shift.", shift_lists);
  add_aggregate(r.checks, "bipartial.", bipartial_lists);
  add_aggregate(r.checks, "bishift.", bishift_lists);
  r.checks.add({"bishift_constructed", "a nonzero bi-shift (x_h y) * F-hat(x_tilde) exists",
                static_cast<double>(bishifts), 1.0, 0.0, bishifts > 0, {}});
  r.details["projection_candidates"] = candidates.size();
  r.details["left_shifts"] = shifts;
  r.details["bishifts"] = bishifts;
  r.details["vanishing_bishift_products"] = vanishing;
  return r;
}

SuiteResult sharpness_suite(const std::string& example, SharpnessMode mode, double p, double q,
                            const OptimizerOptions& options) {
  SuiteResult r;
  r.command = "sharpness";
  r.example = example;
  r.seed = options.seed;
  const bool young = mode == SharpnessMode::Young;
  r.params = {{"mode", young ? "young" : "hausdorff-young"},
              {"p", exponent_to_json(p)},
              {"q", young ? exponent_to_json(q) : Json()},
              {"restarts", options.restarts},
              {"iters", options.iters},
              {"structured_starts", options.structured_starts}};

  const QuantumGroupPtr g = make_example(example);
  const auto group_like = enumerate_group_like_projections(g);
  const WeightedLpSpace base = WeightedLpSpace::base(g);
  SharpnessReport rep;
  double attained = 0.0, recomputed = 0.0;
  if (young) {
    rep = estimate_best_constant_young(g, p, q, options);
    for (const auto& h : group_like) attained = std::max(attained, young_check(base, h, h, p, q).ratio);
    recomputed = young_check(base, rep.argmax[0], rep.argmax[1], p, q).ratio;
  } else {
    const DualPair dp = build_dual(g);
    const WeightedLpSpace dual = WeightedLpSpace::dual(dp);
    rep = estimate_best_constant_hy(dp, p, options);
    for (const auto& h : group_like)
      attained = std::max(attained, hausdorff_young_check(dp, base, dual, h, p).ratio);
    recomputed = hausdorff_young_check(dp, base, dual, rep.argmax[0], p).ratio;
  }
  const double c = rep.constant_estimate;
  r.checks.add({"constant_at_most_one", young ? "B_{p,q} <= 1" : "A_p <= 1", c, 1.0, c - 1.0,
                c <= 1.0 + kYoungConstantCeiling, {}});
  r.checks.add({"constant_at_least_attained", "estimate >= ratio at (h, h) for every group-like h", c, attained,
                attained - c, options.structured_starts ? c >= attained * (1.0 - 1e-12) : true,
                options.structured_starts ? "" : "not enforced: structured starts disabled"});
  r.checks.identity("self_consistent", "ratio recomputed at the reported maximiser", relative_gap(recomputed, c), 1e-9);
  if (!young && p == 2.0) r.checks.identity("plancherel_constant", "A_2 = 1", std::abs(c - 1.0), 1e-9);

  Json argmax = Json::array();
  for (const auto& x : rep.argmax) argmax.push_back(element_to_json(x, "base"));
  Json history = Json::array();
  for (const auto& h : rep.history)
    history.push_back({{"best_ratio", h.best_ratio},
                       {"iterations", h.iterations},
                       {"converged", h.converged},
                       {"structured", h.structured}});
  r.details = {{"constant_estimate", c},
               {"r", exponent_to_json(rep.r)},
               {"argmax", argmax},
               {"restarts_used", rep.restarts_used},
               {"iterations", rep.iterations},
               {"best_restart", rep.best_restart},
               {"converged", rep.converged},
               {"history", history}};
  return r;
}

SuiteResult hunt_suite(const std::string& example, std::size_t budget, std::uint64_t seed, std::size_t iters) {
  SuiteResult r;
  r.command = "hunt";
  r.example = example;
  r.seed = seed;
  r.params = {{"budget", budget}, {"iters", iters}};
  const QuantumGroupPtr g = make_example(example);
  const DualPair dp = build_dual(g);
  const HuntReport rep = hunt_nongrouplike_biprojection(dp, budget, seed, iters);
  Check& c = r.checks.add({"no_nongrouplike_biprojection", "every biprojection found is group-like",
                           static_cast<double>(rep.counterexamples.size()), 0.0,
                           static_cast<double>(rep.counterexamples.size()), rep.counterexamples.empty(), {}});
  c.note = rep.disclaimer;
  auto candidate_json = [](const HuntCandidate& h) {
    Json j = element_to_json(h.projection, "base");
    j["objective"] = h.objective;
    j["projection_residual"] = h.projection_residual;
    j["biprojection_residual"] = h.biprojection_residual;
    j["biprojection"] = h.biprojection;
    j["group_like"] = h.group_like;
    return j;
  };
  Json counter = Json::array(), near = Json::array();
  for (const auto& h : rep.counterexamples) counter.push_back(candidate_json(h));
  for (const auto& h : rep.near_misses) near.push_back(candidate_json(h));
  r.details = {{"counterexamples", counter},
               {"near_misses", near},
               {"group_like_found", rep.group_like_found.size()},
               {"starts", rep.starts},
               {"collapsed", rep.collapsed},
               {"disclaimer", rep.disclaimer}};
  return r;
}

namespace {

using namespace suq2;

Word random_word(Rng& rng, std::size_t length) {
  Word w(length);
  for (auto& l : w) l = static_cast<Letter>(rng.next() % 4);
  return w;
}

std::vector<Word> all_words(std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (int l = 0; l < 4; ++l) {
        Word v = w;
        v.push_back(static_cast<Letter>(l));
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<Monomial> probe_monomials(int total) {
  std::vector<Monomial> out;
  for (int k = -total; k <= total; ++k)
    for (int m = 0; m + std::abs(k) <= total; ++m)
      for (int n = 0; n + m + std::abs(k) <= total; ++n) out.push_back({k, m, n});
  return out;
}

Check exact_check(std::string name, std::string anchor, std::size_t failures, std::size_t cases) {
  Check c{std::move(name), std::move(anchor), static_cast<double>(cases), 0.0, static_cast<double>(failures),
          failures == 0, {}};
  c.note = "exact; lhs = cases, residual = failures";
  return c;
}

Json rational_json(const Rational& q) {
  return {{"exact", q.str()},
          {"numerator", numerator(q).str()},
          {"denominator", denominator(q).str()},
          {"decimal", q.convert_to<double>()}};
}

}  // namespace

SuiteResult suq2_suite(int n, const Rational& mu, std::uint64_t seed, std::size_t random_words) {
  SuiteResult r;
  r.command = "suq2";
  r.seed = seed;
  r.params = {{"n", n}, {"mu", mu.str()}, {"random_words", random_words}};

  const CounterexampleReport rep = counterexample_report(n, mu);
  r.checks.add(exact_check("counterexample_identity", "c*^(2n) * c^(2n) = (-mu^-1)^(2n) phi(c^(2n) c*^(2n)) a^(2n)",
                           rep.identity_holds ? 0 : 1, 1));
  {
    std::size_t failures = 0;
    Rational previous = counterexample_lower_bound(1).evaluate(mu);
    for (int k = 2; k <= std::max(n + 1, 4); ++k) {
      const Rational next = counterexample_lower_bound(k).evaluate(mu);
      failures += next > previous ? 0 : 1;
      previous = next;
    }
    r.checks.add(exact_check("lower_bound_increasing", "L(n, mu) strictly increasing in n", failures,
                             static_cast<std::size_t>(std::max(n + 1, 4) - 1)));
  }
  {
    const Rational ratio = lower_bound_growth_ratio(n).evaluate(mu);
    r.checks.add({"growth_ratio_above_one", "L(n+1, mu) / L(n, mu) > 1", ratio.convert_to<double>(), 1.0,
                  (1 - ratio).convert_to<double>(), ratio > 1, {}});
  }
  r.checks.add({"weak_bound_below_bound", "mu^(-2n)(1 - mu^(2n+2)) <= L(n, mu)", rep.weak_lower_bound.convert_to<double>(),
                rep.lower_bound_decimal, (rep.weak_lower_bound - rep.lower_bound).convert_to<double>(),
                rep.weak_lower_bound <= rep.lower_bound, {}});

  Rng rng(seed);
  {
    std::size_t failures = 0, star_failures = 0;
    for (std::size_t s = 0; s < random_words; ++s) {
      const std::size_t total = rng.next() % 9;
      const std::size_t cut1 = total == 0 ? 0 : rng.next() % (total + 1);
      const std::size_t cut2 = cut1 + (total - cut1 == 0 ? 0 : rng.next() % (total - cut1 + 1));
      const Word w = random_word(rng, total);
      const PolyElement a = normalize(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut1)));
      const PolyElement b = normalize(Word(w.begin() + static_cast<std::ptrdiff_t>(cut1),
                                           w.begin() + static_cast<std::ptrdiff_t>(cut2)));
      const PolyElement c = normalize(Word(w.begin() + static_cast<std::ptrdiff_t>(cut2), w.end()));
      const PolyElement whole = normalize(w);
      if (!((a * b) * c == a * (b * c) && a * (b * c) == whole)) ++failures;
      Word starred(w.rbegin(), w.rend());
      for (auto& l : starred) l = star(l);
      if (!(normalize(starred) == whole.star())) ++star_failures;
    }
    r.checks.add(exact_check("normal_form_confluence", "w1 (w2 w3) = (w1 w2) w3 in normal form", failures, random_words));
    r.checks.add(exact_check("star_compatibility", "normalize(w^*) = normalize(w)^*", star_failures, random_words));
  }
  {
    std::size_t failures = 0;
    const auto words = all_words(4);
    for (const auto& w : words) {
      const TensorElement d = comultiply(normalize(w));
      if (!(comultiply_leg(d, 0) == comultiply_leg(d, 1))) ++failures;
    }
    r.checks.add(exact_check("coassociativity", "(Delta (x) id)Delta = (id (x) Delta)Delta", failures, words.size()));
  }
  {
    const auto probes = probe_monomials(4);
    std::size_t left = 0, right = 0, antipode_fail = 0, counit_fail = 0, inverse_fail = 0;
    const auto haar_fn = [](const Monomial& m) { return haar(m); };
    const auto counit_fn = [](const Monomial& m) { return RationalFunction(counit(PolyElement::monomial(m))); };
    for (const auto& m : probes) {
      const PolyElement x = PolyElement::monomial(m);
      const TensorElement d = comultiply(x);
      RationalPolyElement expected;
      expected.add_term({0, 0, 0}, haar(m));
      left += contract_leg(d, 1, haar_fn) == expected ? 0 : 1;
      right += contract_leg(d, 0, haar_fn) == expected ? 0 : 1;
      const PolyElement eps = PolyElement::one() * counit(x);
      const bool anti = multiply_legs(map_leg(d, 0, antipode)) == eps && multiply_legs(map_leg(d, 1, antipode)) == eps;
      antipode_fail += anti ? 0 : 1;
      const RationalPolyElement xr(x);
      counit_fail += (contract_leg(d, 0, counit_fn) == xr && contract_leg(d, 1, counit_fn) == xr) ? 0 : 1;
      inverse_fail += (antipode(antipode_inverse(x)) == x && antipode_inverse(antipode(x)) == x) ? 0 : 1;
    }
    r.checks.add(exact_check("haar_left_invariance", "(id (x) phi)Delta(x) = phi(x)1", left, probes.size()));
    r.checks.add(exact_check("haar_right_invariance", "(phi (x) id)Delta(x) = phi(x)1", right, probes.size()));
    r.checks.add(exact_check("antipode_axiom", "m(S (x) id)Delta = m(id (x) S)Delta = epsilon(.)1", antipode_fail,
                             probes.size()));
    r.checks.add(exact_check("counit_axiom", "(epsilon (x) id)Delta = (id (x) epsilon)Delta = id", counit_fail,
                             probes.size()));
    r.checks.add(exact_check("antipode_inverse", "S S^-1 = S^-1 S = id", inverse_fail, probes.size()));
  }

  r.details = {{"convolution", rep.convolution.to_string()},
               {"expected", rep.expected.to_string()},
               {"convolution_norm", rep.convolution_norm.to_string()},
               {"convolution_norm_value", rational_json(rep.convolution_norm_value)},
               {"l1_norm", rep.l1_norm.to_string()},
               {"l1_norm_value", rational_json(rep.l1_norm_value)},
               {"lower_bound", rational_json(rep.lower_bound)},
               {"lower_bound_formula", counterexample_lower_bound(n).to_string()},
               {"weak_lower_bound", rational_json(rep.weak_lower_bound)},
               {"note", rep.note}};
  return r;
}

Json to_document(const SuiteResult& r, std::optional<double> elapsed_ms) {
  Json doc;
  doc["tool_version"] = std::string(kToolVersion);
  doc["command"] = r.command;
  doc["example"] = r.example.empty() ? Json() : Json(r.example);
  doc["params"] = r.params;
  doc["checks"] = to_json(r.checks);
  doc["all_hold"] = r.all_hold();
  doc["seed"] = r.seed;
  doc["elapsed_ms"] = elapsed_ms ? Json(*elapsed_ms) : Json();
  doc["details"] = r.details;
  return doc;
}

}  // namespace fqg
