#pragma once

// Seeded instance helpers shared by the unit tests and the acceptance suite.

#include <cstdint>
#include <random>

#include "ihd/ihd.hpp"

namespace ihd::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline PointSet random_points(Rng& rng, std::size_t m, double box) {
  PointSet out;
  for (std::size_t i = 0; i < m; ++i) out.push_back({uniform(rng, 0.0, box), uniform(rng, 0.0, box)});
  return out;
}

inline ImprecisePointSet random_discs(Rng& rng, std::size_t n, double box, double rmin, double rmax) {
  ImprecisePointSet out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back({{uniform(rng, 0.0, box), uniform(rng, 0.0, box)}, uniform(rng, rmin, rmax)});
  return out;
}

inline ImprecisePointSet disjoint_discs(Rng& rng, std::size_t n, double box, double rmin, double rmax, bool unit) {
  return detail::spread_discs(rng, n, box, rmin, rmax, unit, 0.0);
}

inline PointSet random_realisation(Rng& rng, std::span<const Disc> discs) {
  PointSet out;
  for (const Disc& d : discs) out.push_back(detail::uniform_in_disc(rng, d));
  return out;
}

}  // namespace ihd::testing
