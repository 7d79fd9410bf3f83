#pragma once

#include <cstdint>
#include <random>

#include "fqg/matrix.hpp"

namespace fqg {

/// mt19937_64 with hand-rolled uniform/normal draws, so sampled inputs are
/// identical across standard libraries for the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double normal();
  Complex complex_normal() {
    const double re = normal();
    return {re, normal()};
  }
  /// Independent complex Gaussian coordinates.
  CVector ginibre(std::size_t n);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace fqg
