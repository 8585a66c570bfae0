#pragma once

// Seeded instance generators: uniform random instances, disjoint-disc
// instances with a planted h_min below the small threshold, and the bundled
// hardness gadgets.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "ihd/gadgets.hpp"
#include "ihd/independent_sets.hpp"
#include "ihd/instance_io.hpp"

namespace ihd {

struct RandomOptions {
  std::size_t m = 3, n = 3;
  double box = 10.0;
  double rmin = 0.2, rmax = 1.5;
  bool disjoint = false;
  bool unit = false;  // every radius 1
  bool p_imprecise = false;
  bool q_imprecise = true;
  std::uint64_t seed = 1;
};

namespace detail {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Point uniform_in_disc(std::mt19937_64& rng, const Disc& d) {
  const double rho = d.radius * std::sqrt(uniform(rng, 0.0, 1.0));
  return d.centre + rho * unit_from_angle(uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

/// n discs in the box whose pairwise gaps are at least `gap`.
inline ImprecisePointSet spread_discs(std::mt19937_64& rng, std::size_t n, double box, double rmin, double rmax,
                                      bool unit, double gap) {
  ImprecisePointSet out;
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 10000 && !placed; ++attempt) {
      const double r = unit ? 1.0 : uniform(rng, rmin, rmax);
      const Disc d{{uniform(rng, 0.0, box), uniform(rng, 0.0, box)}, r};
      placed = std::all_of(out.begin(), out.end(), [&](const Disc& e) {
        return distance(d.centre, e.centre) > d.radius + e.radius + gap;
      });
      if (placed) out.push_back(d);
    }
    if (!placed) throw InvalidInput("generator: could not place disjoint discs; enlarge the box");
  }
  return out;
}

}  // namespace detail

inline InstanceDocument generate_random(const RandomOptions& o) {
  if (o.m == 0 || o.n == 0) throw InvalidInput("generator: m and n must be positive");
  if (!(o.box > 0.0) || o.rmin < 0.0 || o.rmax < o.rmin) throw InvalidInput("generator: invalid box or radius range");
  std::mt19937_64 rng(o.seed);
  InstanceDocument doc;
  doc.name = "random-" + std::to_string(o.seed);
  if (o.p_imprecise) {
    ImprecisePointSet P;
    for (std::size_t i = 0; i < o.m; ++i)
      P.push_back({{detail::uniform(rng, 0.0, o.box), detail::uniform(rng, 0.0, o.box)},
                   o.unit ? 1.0 : detail::uniform(rng, o.rmin, o.rmax)});
    doc.p = P;
  } else {
    PointSet P;
    for (std::size_t i = 0; i < o.m; ++i) P.push_back({detail::uniform(rng, 0.0, o.box), detail::uniform(rng, 0.0, o.box)});
    doc.p = P;
  }
  if (o.q_imprecise) {
    if (o.disjoint) {
      doc.q = detail::spread_discs(rng, o.n, o.box, o.rmin, o.rmax, o.unit, 0.0);
    } else {
      ImprecisePointSet Q;
      for (std::size_t i = 0; i < o.n; ++i)
        Q.push_back({{detail::uniform(rng, 0.0, o.box), detail::uniform(rng, 0.0, o.box)},
                     o.unit ? 1.0 : detail::uniform(rng, o.rmin, o.rmax)});
      doc.q = Q;
    }
  } else {
    PointSet Q;
    for (std::size_t i = 0; i < o.n; ++i) Q.push_back({detail::uniform(rng, 0.0, o.box), detail::uniform(rng, 0.0, o.box)});
    doc.q = Q;
  }
  return doc;
}

struct PlantedOptions {
  std::size_t m = 4, n = 3;
  double box = 20.0;
  double rmin = 1.0, rmax = 2.0;
  bool unit = false;
  /// Planted value as a fraction of the small threshold for r_min.
  double fraction = 0.5;
  std::uint64_t seed = 1;
};

/// Disjoint discs, a hidden realisation q_i per disc and points within delta
/// of it; two points at q_0 +- delta v make h_min exactly delta. Discs keep a
/// gap of half the smallest radius so that no point reaches a second disc
/// within delta.
inline InstanceDocument generate_planted(const PlantedOptions& o) {
  if (o.m < 2 || o.n == 0) throw InvalidInput("planted generator: needs m >= 2 and n >= 1");
  if (!(o.fraction > 0.0 && o.fraction < 1.0)) throw InvalidInput("planted generator: fraction must be in (0, 1)");
  if (!(o.box > 0.0) || !(o.rmin > 0.0) || o.rmax < o.rmin) throw InvalidInput("planted generator: invalid box or radius range");
  std::mt19937_64 rng(o.seed);
  const double r_floor = o.unit ? 1.0 : o.rmin;
  ImprecisePointSet Q = detail::spread_discs(rng, o.n, o.box, o.rmin, o.rmax, o.unit, 0.5 * r_floor);
  const double delta = o.fraction * SmallThreshold::value(min_radius(Q));

  PointSet hidden;
  for (const Disc& d : Q) hidden.push_back(detail::uniform_in_disc(rng, d));
  PointSet P;
  const Point v = unit_from_angle(detail::uniform(rng, 0.0, 2.0 * std::numbers::pi));
  P.push_back(hidden[0] + delta * v);
  P.push_back(hidden[0] - delta * v);
  std::uniform_int_distribution<std::size_t> pick(0, o.n - 1);
  while (P.size() < o.m) {
    const std::size_t i = pick(rng);
    P.push_back(detail::uniform_in_disc(rng, {hidden[i], delta}));
  }
  InstanceDocument doc;
  doc.name = "planted-" + std::to_string(o.seed);
  doc.expected_hmin = delta;
  doc.p = P;
  doc.q = Q;
  return doc;
}

/// One of the bundled reduction templates: "single" or "pair".
inline InstanceDocument generate_gadget(const std::string& which, double eps) {
  GadgetTemplate t;
  if (which == "single") t = single_variable_template(eps);
  else if (which == "pair") t = two_variable_template(eps);
  else throw InvalidInput("gadget generator: unknown template '" + which + "' (single, pair)");
  const GadgetInstance inst = assemble(t.formula, t.embedding, eps);
  InstanceDocument doc;
  doc.name = "gadget " + t.name;
  doc.epsilon = eps;
  doc.p = inst.P;
  doc.q = inst.Q;
  return doc;
}

}  // namespace ihd
