#pragma once

// Seeded generators for random discs. Doubles are built from raw mt19937_64
// output rather than std distributions, so a seed gives the same discs on
// every standard library.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "cfloer/discs/blaschke.hpp"

namespace cfloer {

class DiscSampler {
 public:
  explicit DiscSampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  /// Uniform point of the disc |z| <= radius.
  Complex point_in_disc(double radius) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
  }

  Moebius moebius(double radius = 0.9) { return Moebius{2.0 * std::numbers::pi * uniform(), point_in_disc(radius)}; }

  /// n in [1, max_rank], component degrees in [0, max_degree], zeros with
  /// |a| <= 0.9. With chart_zero set, gamma_0 has no zeros (mu_0 = 0).
  BlaschkeDisc disc(int max_rank, int max_degree, bool chart_zero) {
    for (;;) {
      const int n = integer(1, max_rank);
      std::vector<BlaschkeComponent> cs;
      for (int i = 0; i <= n; ++i) {
        const int deg = (chart_zero && i == 0) ? 0 : integer(0, max_degree);
        std::vector<BlaschkeFactor> fs;
        for (int k = 0; k < deg; ++k) fs.emplace_back(point_in_disc(0.9));
        cs.emplace_back(2.0 * std::numbers::pi * uniform(), std::move(fs));
      }
      try {
        return BlaschkeDisc(std::move(cs));
      } catch (const DegenerateDisc&) {
        // Only possible when zeros collide; draw again.
      }
    }
  }

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cfloer
