#include "fqg/sharpness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "fqg/error.hpp"
#include "fqg/lpconv.hpp"
#include "fqg/random.hpp"
#include "fqg/structures.hpp"

namespace fqg {

namespace {

using Objective = std::function<double(const CVector&)>;
using Normalizer = std::function<CVector(const CVector&)>;

constexpr double kStopImprovement = 1e-8;
constexpr double kFiniteDifference = 1e-6;
constexpr double kGaugeCutoff = 1e-6;

/// Central differences on the 2n real coordinates.
CVector numerical_gradient(const Objective& f, const CVector& x) {
  CVector grad(x.size());
  CVector probe = x;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double hr = kFiniteDifference * std::max(1.0, std::abs(x[k].real()));
    probe[k] = x[k] + Complex(hr, 0.0);
    const double up = f(probe);
    probe[k] = x[k] - Complex(hr, 0.0);
    const double down = f(probe);
    const double hi = kFiniteDifference * std::max(1.0, std::abs(x[k].imag()));
    probe[k] = x[k] + Complex(0.0, hi);
    const double up_i = f(probe);
    probe[k] = x[k] - Complex(0.0, hi);
    const double down_i = f(probe);
    probe[k] = x[k];
    grad[k] = Complex((up - down) / (2.0 * hr), (up_i - down_i) / (2.0 * hi));
  }
  return grad;
}

/// One projected gradient step with backtracking; returns false when no
/// improving step was found.
bool ascent_step(const Objective& f, const Normalizer& normalize, CVector& x, double& value, double& step) {
  const CVector grad = numerical_gradient(f, x);
  const double gnorm = norm2(grad);
  if (!(gnorm > 0.0) || !std::isfinite(gnorm)) return false;
  double t = std::min(step * 2.0, 1.0);
  for (int halving = 0; halving < 50; ++halving, t *= 0.5) {
    CVector trial(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) trial[k] = x[k] + (t / gnorm) * grad[k];
    trial = normalize(trial);
    const double v = f(trial);
    if (std::isfinite(v) && v > value) {
      x = std::move(trial);
      value = v;
      step = t;
      return true;
    }
  }
  return false;
}

bool stalled(double before, double after) {
  return after - before <= kStopImprovement * std::max(std::abs(before), 1e-300);
}

/// Catches slow creep as well as single flat steps: stops when the gain over
/// the last kWindow iterations is below kWindowImprovement relative.
class StallTracker {
 public:
  explicit StallTracker(double start) { values_.push_back(start); }

  bool record(double value) {
    const double before = values_.back();
    values_.push_back(value);
    if (stalled(before, value)) return true;
    if (values_.size() <= kWindow) return false;
    const double old = values_[values_.size() - 1 - kWindow];
    return value - old <= kWindowImprovement * std::max(std::abs(old), 1e-300);
  }

 private:
  static constexpr std::size_t kWindow = 20;
  static constexpr double kWindowImprovement = 1e-5;
  std::vector<double> values_;
};

template <typename Task>
void run_indexed(std::size_t count, unsigned threads, Task task) {
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (workers <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<AlgebraElement> structured_points(const QuantumGroupPtr& g) {
  try {
    return enumerate_group_like_projections(g);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnknownExample) return {};
    throw;
  }
}

struct RestartResult {
  std::vector<CVector> point;
  RestartSummary summary;
};

std::size_t pick_best(const std::vector<RestartResult>& results) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].summary.best_ratio > results[best].summary.best_ratio * (1.0 + 1e-12)) best = i;
  return best;
}

std::vector<std::uint64_t> restart_seeds(std::uint64_t seed, std::size_t count) {
  Rng master(seed);
  std::vector<std::uint64_t> seeds(count);
  for (auto& s : seeds) s = master.next();
  return seeds;
}

}  // namespace

AlgebraElement gauge_normalize(const AlgebraElement& x, double p) {
  const double norm = WeightedLpSpace::base(x.owner()).norm(x, p);
  if (!(norm > 0.0)) return x;
  CVector c = x.coeffs();
  const double cutoff = kGaugeCutoff * max_abs(c);
  Complex phase = 1.0;
  bool leading = true;
  for (auto& v : c) {
    if (std::abs(v) <= cutoff) {
      v = 0.0;
    } else if (leading) {
      phase = std::conj(v) / std::abs(v);
      leading = false;
    }
  }
  leading = true;
  for (auto& v : c) {
    v *= phase / norm;
    if (leading && v != Complex{}) {
      v = Complex(v.real(), 0.0);
      leading = false;
    }
  }
  return AlgebraElement(x.owner(), std::move(c));
}

SharpnessReport estimate_best_constant_young(const QuantumGroupPtr& g, double p, double q,
                                             const OptimizerOptions& options) {
  const double r = young_exponent(p, q);
  const WeightedLpSpace space = WeightedLpSpace::base(g);
  const std::size_t n = g->dim();
  auto ratio = [&](const CVector& x, const CVector& y) {
    const AlgebraElement ex(g, x), ey(g, y);
    const double denom = space.norm(ex, p) * space.norm(ey, q);
    return denom > 0.0 ? space.norm(convolve(ex, ey), r) / denom : 0.0;
  };
  auto normalizer = [&](double exponent) -> Normalizer {
    return [&, exponent](const CVector& v) {
      const double s = space.norm(AlgebraElement(g, v), exponent);
      CVector out = v;
      if (s > 0.0)
        for (auto& c : out) c /= s;
      return out;
    };
  };
  const Normalizer norm_x = normalizer(p), norm_y = normalizer(q);

  std::vector<std::pair<CVector, CVector>> starts;
  const auto seeds = restart_seeds(options.seed, options.restarts);
  for (std::size_t i = 0; i < options.restarts; ++i) {
    Rng rng(seeds[i]);
    CVector x = rng.ginibre(n);
    CVector y = rng.ginibre(n);
    starts.emplace_back(std::move(x), std::move(y));
  }
  const std::size_t random_count = starts.size();
  if (options.structured_starts)
    for (const auto& h : structured_points(g)) starts.emplace_back(h.coeffs(), h.coeffs());

  std::vector<RestartResult> results(starts.size());
  run_indexed(starts.size(), options.threads, [&](std::size_t i) {
    CVector x = norm_x(starts[i].first), y = norm_y(starts[i].second);
    double value = ratio(x, y);
    double step_x = 0.25, step_y = 0.25;
    RestartSummary s;
    s.structured = i >= random_count;
    const Objective fx = [&](const CVector& v) { return ratio(v, y); };
    const Objective fy = [&](const CVector& v) { return ratio(x, v); };
    StallTracker tracker(value);
    for (s.iterations = 0; s.iterations < options.iters;) {
      ++s.iterations;
      const bool moved_x = ascent_step(fx, norm_x, x, value, step_x);
      const bool moved_y = ascent_step(fy, norm_y, y, value, step_y);
      if (tracker.record(value) || (!moved_x && !moved_y)) {
        s.converged = true;
        break;
      }
    }
    s.best_ratio = value;
    results[i] = {{x, y}, s};
  });

  SharpnessReport rep;
  rep.p = p;
  rep.q = q;
  rep.r = r;
  rep.seed = options.seed;
  rep.restarts_used = results.size();
  for (const auto& res : results) rep.history.push_back(res.summary);
  rep.best_restart = pick_best(results);
  const auto& best = results[rep.best_restart];
  rep.iterations = best.summary.iterations;
  rep.converged = best.summary.converged;
  rep.argmax = {gauge_normalize(AlgebraElement(g, best.point[0]), p),
                gauge_normalize(AlgebraElement(g, best.point[1]), q)};
  rep.constant_estimate = ratio(rep.argmax[0].coeffs(), rep.argmax[1].coeffs());
  return rep;
}

SharpnessReport estimate_best_constant_hy(const DualPair& dp, double p, const OptimizerOptions& options) {
  if (!(p >= 1.0 && p <= 2.0)) throw Error(ErrorKind::BadExponents, "Hausdorff-Young needs p in [1, 2]");
  const double pc = conjugate_exponent(p);
  const auto& g = dp.base;
  const WeightedLpSpace base = WeightedLpSpace::base(g);
  const WeightedLpSpace dual = WeightedLpSpace::dual(dp);
  const std::size_t n = g->dim();
  const Objective ratio = [&](const CVector& x) {
    const AlgebraElement ex(g, x);
    const double denom = base.norm(ex, p);
    return denom > 0.0 ? dual.norm(fourier_element(dp, ex), pc) / denom : 0.0;
  };
  const Normalizer normalize = [&](const CVector& v) {
    const double s = base.norm(AlgebraElement(g, v), p);
    CVector out = v;
    if (s > 0.0)
      for (auto& c : out) c /= s;
    return out;
  };

  std::vector<CVector> starts;
  const auto seeds = restart_seeds(options.seed, options.restarts);
  for (std::size_t i = 0; i < options.restarts; ++i) {
    Rng rng(seeds[i]);
    starts.push_back(rng.ginibre(n));
  }
  const std::size_t random_count = starts.size();
  if (options.structured_starts)
    for (const auto& h : structured_points(g)) starts.push_back(h.coeffs());

  std::vector<RestartResult> results(starts.size());
  run_indexed(starts.size(), options.threads, [&](std::size_t i) {
    CVector x = normalize(starts[i]);
    double value = ratio(x);
    double step = 0.25;
    RestartSummary s;
    s.structured = i >= random_count;
    StallTracker tracker(value);
    for (s.iterations = 0; s.iterations < options.iters;) {
      ++s.iterations;
      const bool moved = ascent_step(ratio, normalize, x, value, step);
      if (tracker.record(value) || !moved) {
        s.converged = true;
        break;
      }
    }
    s.best_ratio = value;
    results[i] = {{x}, s};
  });

  SharpnessReport rep;
  rep.p = p;
  rep.q = pc;
  rep.r = pc;
  rep.seed = options.seed;
  rep.restarts_used = results.size();
  for (const auto& res : results) rep.history.push_back(res.summary);
  rep.best_restart = pick_best(results);
  const auto& best = results[rep.best_restart];
  rep.iterations = best.summary.iterations;
  rep.converged = best.summary.converged;
  rep.argmax = {gauge_normalize(AlgebraElement(g, best.point[0]), p)};
  rep.constant_estimate = ratio(rep.argmax[0].coeffs());
  return rep;
}

HuntReport hunt_nongrouplike_biprojection(const DualPair& dp, std::size_t budget, std::uint64_t seed,
                                          std::size_t iters) {
  const auto& g = dp.base;
  const std::size_t n = g->dim();
  std::vector<ComplexMatrix> frame_basis;
  for (const auto& d : dp.dual_basis) frame_basis.push_back(dp.gram_root * d * dp.gram_root_inverse);
  std::vector<ComplexMatrix> regular;
  for (std::size_t i = 0; i < n; ++i) regular.push_back(dp.gram_root * g->left_regular(i) * dp.gram_root_inverse);

  // barrier against the trivial minimiser P = 0
  Rng probe(seed ^ 0x9e3779b97f4a7c15ULL);
  const AlgebraElement z(g, probe.ginibre(n));
  double smallest = 1.0;
  for (const auto& m : spectral_projections(z + z.star())) smallest = std::min(smallest, m.haar().real());
  const double floor_weight = 0.5 * smallest;
  constexpr double penalty = 10.0;

  auto combine = [&](const std::vector<ComplexMatrix>& basis, const CVector& c) {
    ComplexMatrix out(n, n);
    for (std::size_t j = 0; j < n; ++j)
      if (c[j] != Complex{}) out += basis[j] * c[j];
    return out;
  };
  auto fourier_term = [&](const CVector& c) {
    const ComplexMatrix a = combine(frame_basis, c);
    const double na = std::pow(a.frobenius_norm(), 2);
    if (na < 1e-30) return 1.0;
    const ComplexMatrix a2 = a * a;
    Complex inner{};
    for (std::size_t i = 0; i < a.entries().size(); ++i) inner += std::conj(a.entries()[i]) * a2.entries()[i];
    const Complex fit = inner / na;
    return std::pow((a2 - a * fit).frobenius_norm(), 2) / (na * na);
  };
  auto projection_term = [&](const CVector& c) {
    const ComplexMatrix x = combine(regular, c);
    return std::pow((x * x - x).frobenius_norm(), 2) + std::pow((x - x.adjoint()).frobenius_norm(), 2);
  };
  const Objective objective = [&](const CVector& c) {
    const double weight = g->haar(c).real();
    const double barrier = std::max(0.0, floor_weight - weight);
    return fourier_term(c) + penalty * (projection_term(c) + barrier * barrier);
  };
  const Objective negated = [&](const CVector& c) { return -objective(c); };
  const Normalizer identity = [](const CVector& v) { return v; };

  struct Local {
    CVector point;
    double value = 0.0;
  };
  std::vector<Local> minima(budget);
  const auto seeds = restart_seeds(seed, budget);
  run_indexed(budget, 0, [&](std::size_t i) {
    Rng rng(seeds[i]);
    CVector c = rng.ginibre(n);
    for (auto& v : c) v *= 0.5;
    double value = negated(c);
    double step = 0.1;
    StallTracker tracker(value);
    for (std::size_t it = 0; it < iters; ++it) {
      const bool moved = ascent_step(negated, identity, c, value, step);
      if (tracker.record(value) || !moved) break;
    }
    minima[i] = {c, -value};
  });

  HuntReport rep;
  rep.starts = budget;
  rep.seed = seed;
  rep.disclaimer =
      "Heuristic local search: an empty counterexample list is evidence only, not a proof that every "
      "biprojection of this quantum group is group-like.";
  std::vector<AlgebraElement> seen;
  for (const auto& m : minima) {
    // round to the spectral projection of the self-adjoint part above 1/2
    const ComplexMatrix x = combine(regular, m.point);
    const ComplexMatrix h = (x + x.adjoint()) * 0.5;
    const auto eig = eig_hermitian(h, 1e-6);
    ComplexMatrix proj(n, n);
    for (std::size_t k = 0; k < n; ++k)
      if (eig.values[k] > 0.5) {
        const CVector v = eig.vectors.column(k);
        proj += ComplexMatrix::outer(v, v);
      }
    const AlgebraElement rounded(g, (dp.gram_root_inverse * proj * dp.gram_root).apply(g->unit()));
    if (max_abs(rounded.coeffs()) < 1e-9) {
      ++rep.collapsed;
      continue;
    }
    bool duplicate = false;
    for (const auto& s : seen) duplicate = duplicate || max_abs_diff(s, rounded) < 1e-7;
    if (duplicate) {
      ++rep.collapsed;
      continue;
    }
    seen.push_back(rounded);
    HuntCandidate c{rounded, m.value, projection_term(m.point), 0.0, false, false};
    const auto bip = is_biprojection(dp, rounded);
    c.biprojection = bip.biprojection;
    c.biprojection_residual = bip.projection_residual;
    c.group_like = is_group_like_projection(rounded).certified;
    if (c.biprojection && !c.group_like) {
      rep.counterexamples.push_back(c);
    } else if (c.group_like) {
      rep.group_like_found.push_back(rounded);
    } else if (m.value < 1e-4) {
      rep.near_misses.push_back(c);
    }
  }
  return rep;
}

}  // namespace fqg
