#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqg/duality.hpp"
#include "fqg/quantum_group.hpp"

namespace fqg {

struct OptimizerOptions {
  std::size_t restarts = 32;
  std::size_t iters = 2000;
  std::uint64_t seed = 42;
  /// Also start from (h, h) for every enumerated group-like h, after the random starts.
  bool structured_starts = true;
  /// 0 = one thread per hardware core.
  unsigned threads = 0;
};

struct RestartSummary {
  double best_ratio = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  bool structured = false;
};

struct SharpnessReport {
  double constant_estimate = 0.0;
  std::vector<AlgebraElement> argmax;  // x (and y for Young)
  std::size_t restarts_used = 0;
  std::size_t iterations = 0;  // of the winning restart
  std::size_t best_restart = 0;
  std::uint64_t seed = 0;
  bool converged = false;
  std::vector<RestartSummary> history;
  double p = 1.0;
  double q = 1.0;
  double r = 1.0;
};

/// Best constant in ||x * y||_r <= B ||x||_p ||y||_q by alternating projected
/// gradient ascent on the L^p spheres.
SharpnessReport estimate_best_constant_young(const QuantumGroupPtr& g, double p, double q,
                                             const OptimizerOptions& options);

/// Best constant in ||F(x)||_{p'} <= A ||x||_p.
SharpnessReport estimate_best_constant_hy(const DualPair& dp, double p, const OptimizerOptions& options);

/// Unit L^p norm, first nonzero coefficient real positive.
AlgebraElement gauge_normalize(const AlgebraElement& x, double p);

struct HuntCandidate {
  AlgebraElement projection;
  double objective = 0.0;
  double projection_residual = 0.0;  // of the unrounded minimiser
  double biprojection_residual = 0.0;
  bool biprojection = false;
  bool group_like = false;
};

struct HuntReport {
  std::vector<HuntCandidate> counterexamples;  // biprojection but not group-like
  std::vector<HuntCandidate> near_misses;      // small objective, certification failed
  std::vector<AlgebraElement> group_like_found;
  std::size_t starts = 0;
  std::size_t collapsed = 0;  // minimisers rounding to 0 or 1 only count once
  std::uint64_t seed = 0;
  std::string disclaimer;
};

/// Minimises J(P) = ||F(P)^2 - c F(P)||^2 / ||F(P)||^4 + penalties for P^2 != P,
/// P != P^*, and phi(P) below the smallest minimal-projection weight, then
/// certifies each rounded minimiser.
HuntReport hunt_nongrouplike_biprojection(const DualPair& dp, std::size_t budget, std::uint64_t seed,
                                          std::size_t iters = 400);

}  // namespace fqg
