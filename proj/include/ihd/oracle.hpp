#pragma once

// Brute-force references for small instances: exact assignment enumeration
// for h_min(P, Q̃) and sampled brackets for h_min and h_max.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ihd/geometry.hpp"

namespace ihd {

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
  double resolution = 0.0;

  bool contains(double v, double slack = 1e-9) const { return v >= lower - slack && v <= upper + slack; }
};

/// Grid of pitch `step` clipped to the disc plus ceil(4 pi r / step) evenly
/// spaced boundary points. Every point of the disc lies within step of a
/// sample.
inline PointSet sample_disc(const Disc& d, double step) {
  if (!(step > 0.0)) throw InvalidInput("sample_disc: step must be positive");
  if (d.radius == 0.0) return {d.centre};
  PointSet out;
  const auto reach = static_cast<long>(std::floor(d.radius / step));
  for (long i = -reach; i <= reach; ++i)
    for (long j = -reach; j <= reach; ++j) {
      const Point off{static_cast<double>(i) * step, static_cast<double>(j) * step};
      if (norm(off) <= d.radius) out.push_back(d.centre + off);
    }
  const auto ring = static_cast<std::size_t>(std::ceil(4.0 * std::numbers::pi * d.radius / step));
  for (std::size_t k = 0; k < ring; ++k)
    out.push_back(d.centre + d.radius * unit_from_angle(2.0 * std::numbers::pi * static_cast<double>(k) /
                                                        static_cast<double>(ring)));
  return out;
}

namespace detail {

inline double nearest(Point x, std::span<const Point> Q) {
  double best = std::numeric_limits<double>::infinity();
  for (Point q : Q) best = std::min(best, squared_distance(x, q));
  return std::sqrt(best);
}

/// Calls f on every combination of one sample per set, in odometer order.
template <class F>
void for_each_product(const std::vector<PointSet>& sets, F&& f) {
  std::vector<std::size_t> idx(sets.size(), 0);
  PointSet pick(sets.size());
  for (std::size_t j = 0; j < sets.size(); ++j) pick[j] = sets[j][0];
  for (;;) {
    f(std::as_const(pick));
    std::size_t j = 0;
    while (j < sets.size() && ++idx[j] == sets[j].size()) {
      idx[j] = 0;
      pick[j] = sets[j][0];
      ++j;
    }
    if (j == sets.size()) return;
    pick[j] = sets[j][idx[j]];
  }
}

inline double product_size(const std::vector<PointSet>& sets) {
  double n = 1.0;
  for (const auto& s : sets) n *= static_cast<double>(s.size());
  return n;
}

inline constexpr double kSampleBudget = 1e7;

}  // namespace detail

namespace detail {

/// Golden-section search for the minimum of a convex function on [lo, hi].
template <class F>
double golden_min(double lo, double hi, F&& f) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 90 && b - a > 0.0; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    }
  }
  return std::min({f1, f2, f(lo), f(hi)});
}

}  // namespace detail

/// min over x in q of max over p in P of |x - p|. The objective is convex, so
/// its minimum over each vertical chord of q is convex in the abscissa and
/// nested golden-section searches converge to it.
inline double oracle_serve_radius(std::span<const Point> P, const Disc& q) {
  if (P.empty()) return 0.0;
  auto reach = [&](Point x) {
    double worst = 0.0;
    for (Point p : P) worst = std::max(worst, squared_distance(x, p));
    return std::sqrt(worst);
  };
  if (q.radius == 0.0) return reach(q.centre);
  auto column = [&](double x) {
    const double dx = x - q.centre.x;
    const double half = std::sqrt(std::max(0.0, q.radius * q.radius - dx * dx));
    return detail::golden_min(q.centre.y - half, q.centre.y + half, [&](double y) { return reach({x, y}); });
  };
  return detail::golden_min(q.centre.x - q.radius, q.centre.x + q.radius, column);
}

/// Exact h_min(P, Q̃) by trying every assignment of points to discs. The value
/// of an assignment is the largest serving radius over its discs. Limited to
/// m <= 6 and n <= 3.
inline double oracle_hmin_exact(std::span<const Point> P, std::span<const Disc> Q) {
  if (Q.empty()) throw InvalidInput("oracle_hmin_exact: no discs");
  if (P.size() > 6 || Q.size() > 3) throw BudgetExceeded("oracle_hmin_exact: instance exceeds m <= 6, n <= 3");
  if (P.empty()) return 0.0;
  const std::size_t m = P.size(), n = Q.size();
  const std::size_t subsets = std::size_t{1} << m;

  std::vector<std::vector<double>> serve(n, std::vector<double>(subsets, 0.0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      PointSet members;
      for (std::size_t p = 0; p < m; ++p)
        if ((mask >> p) & 1) members.push_back(P[p]);
      serve[j][mask] = oracle_serve_radius(members, Q[j]);
    }

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> owner(m, 0);
  for (;;) {
    std::vector<std::size_t> mask(n, 0);
    for (std::size_t p = 0; p < m; ++p) mask[owner[p]] |= std::size_t{1} << p;
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, serve[j][mask[j]]);
    best = std::min(best, worst);
    std::size_t p = 0;
    while (p < m && ++owner[p] == n) owner[p++] = 0;
    if (p == m) break;
  }
  return best;
}

/// Sampled h_min(P̃, Q̃); radius-zero discs stand for precise points.
inline Bracket oracle_hmin_bracket(std::span<const Disc> P, std::span<const Disc> Q, double step) {
  if (P.empty() || Q.empty()) throw InvalidInput("oracle_hmin_bracket: empty input");
  validate(P, "oracle P");
  validate(Q, "oracle Q");
  const bool p_moves = max_radius(P) > 0.0, q_moves = max_radius(Q) > 0.0;
  const double s = step * ((p_moves ? 1.0 : 0.0) + (q_moves ? 1.0 : 0.0));

  std::vector<PointSet> p_samples, q_samples;
  for (const Disc& d : P) p_samples.push_back(sample_disc(d, step));
  for (const Disc& d : Q) q_samples.push_back(sample_disc(d, step));
  if (detail::product_size(q_samples) > detail::kSampleBudget)
    throw BudgetExceeded("oracle_hmin_bracket: too many sampled realisations of Q");

  // For a fixed Q the points of P̃ are chosen independently.
  double grid_min = std::numeric_limits<double>::infinity();
  detail::for_each_product(q_samples, [&](const PointSet& q) {
    double worst = 0.0;
    for (const PointSet& options : p_samples) {
      double best = std::numeric_limits<double>::infinity();
      for (Point x : options) best = std::min(best, detail::nearest(x, q));
      worst = std::max(worst, best);
      if (worst >= grid_min) return;
    }
    grid_min = std::min(grid_min, worst);
  });
  return {std::max(0.0, grid_min - s), grid_min, s};
}

inline Bracket oracle_hmin_bracket(std::span<const Point> P, std::span<const Disc> Q, double step) {
  return oracle_hmin_bracket(lift(P), Q, step);
}

/// Sampled h_max(P̃, Q̃). The realisations of Q̃ are independent, so the
/// worst Q for a fixed p pushes every q_j to its sampled farthest point.
inline Bracket oracle_hmax_bracket(std::span<const Disc> P, std::span<const Disc> Q, double step) {
  if (P.empty() || Q.empty()) throw InvalidInput("oracle_hmax_bracket: empty input");
  validate(P, "oracle P");
  validate(Q, "oracle Q");
  const double s = step * ((max_radius(P) > 0.0 ? 1.0 : 0.0) + (max_radius(Q) > 0.0 ? 1.0 : 0.0));

  std::vector<PointSet> p_samples;
  double work = 0.0;
  for (const Disc& d : P) {
    p_samples.push_back(sample_disc(d, step));
    work += static_cast<double>(p_samples.back().size()) * static_cast<double>(Q.size());
  }
  if (work > detail::kSampleBudget * 10.0)
    throw BudgetExceeded("oracle_hmax_bracket: sampling work exceeds budget");

  // Farthest ring sample from x: the three samples around the antipodal angle.
  auto farthest_on_ring = [step](Point x, const Disc& d) {
    if (d.radius == 0.0) return distance(x, d.centre);
    const auto ring = static_cast<long>(std::ceil(4.0 * std::numbers::pi * d.radius / step));
    const double pitch = 2.0 * std::numbers::pi / static_cast<double>(ring);
    const Point away = d.centre - x;
    const double theta = norm(away) > 0.0 ? std::atan2(away.y, away.x) : 0.0;
    const auto k = static_cast<long>(std::lround(theta / pitch));
    double far = 0.0;
    for (long t = k - 1; t <= k + 1; ++t) {
      const long idx = ((t % ring) + ring) % ring;
      far = std::max(far, distance(x, d.centre + d.radius * unit_from_angle(pitch * static_cast<double>(idx))));
    }
    return far;
  };

  double grid_max = 0.0;
  for (const PointSet& options : p_samples)
    for (Point x : options) {
      double best = std::numeric_limits<double>::infinity();
      for (const Disc& d : Q) best = std::min(best, farthest_on_ring(x, d));
      grid_max = std::max(grid_max, best);
    }
  return {grid_max, grid_max + s, s};
}

}  // namespace ihd
