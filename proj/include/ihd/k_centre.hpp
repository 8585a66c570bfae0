#pragma once

// Geometric k-centre: the greedy farthest-point 2-approximation and an exact
// small-k decision by candidate-centre enumeration.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ihd/geometry.hpp"

namespace ihd {

struct KCentreResult {
  PointSet centres;
  double radius = 0.0;
};

/// Seeds with points[0] and repeatedly adds the point farthest from the chosen
/// centres, lowest index on ties. Stops early once every point is a centre.
inline KCentreResult gonzalez_k_centre(std::span<const Point> points, std::size_t k) {
  if (k == 0) throw InvalidInput("gonzalez_k_centre: k must be positive");
  if (points.empty()) throw InvalidInput("gonzalez_k_centre: no points");
  KCentreResult out;
  std::vector<double> nearest(points.size(), std::numeric_limits<double>::infinity());
  std::size_t next = 0;
  while (out.centres.size() < std::min(k, points.size())) {
    out.centres.push_back(points[next]);
    for (std::size_t i = 0; i < points.size(); ++i)
      nearest[i] = std::min(nearest[i], distance(points[i], points[next]));
    next = static_cast<std::size_t>(std::max_element(nearest.begin(), nearest.end()) - nearest.begin());
  }
  out.radius = *std::max_element(nearest.begin(), nearest.end());
  return out;
}

namespace detail {

using Mask = std::vector<std::uint64_t>;

inline bool covers_bit(const Mask& m, std::size_t i) { return (m[i / 64] >> (i % 64)) & 1U; }

}  // namespace detail

/// At most k centres covering every point within d(1 + eps_predicate), or
/// nothing if no k radius-d circles cover the points.
inline std::optional<PointSet> exact_k_cover(std::span<const Point> points, std::size_t k, double d,
                                             const Tolerance& tol = {}) {
  if (k > 4) throw InvalidInput("exact_k_cover: k must be at most 4");
  if (points.empty()) return PointSet{};
  if (k == 0) return std::nullopt;

  const std::size_t m = points.size();
  PointSet candidates(points.begin(), points.end());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (Point x : circle_circle_intersections({points[a], d}, {points[b], d}, tol).points)
        candidates.push_back(x);

  const double reach = d * (1.0 + tol.eps_predicate) + tol.eps_predicate;
  const std::size_t words = (m + 63) / 64;
  std::vector<detail::Mask> cover(candidates.size(), detail::Mask(words, 0));
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (std::size_t i = 0; i < m; ++i)
      if (distance(candidates[c], points[i]) <= reach) cover[c][i / 64] |= std::uint64_t{1} << (i % 64);

  PointSet chosen;
  // Branch only on candidates covering the lowest uncovered point.
  auto search = [&](auto&& self, const detail::Mask& covered, std::size_t left) -> bool {
    std::size_t first = m;
    for (std::size_t i = 0; i < m; ++i)
      if (!detail::covers_bit(covered, i)) {
        first = i;
        break;
      }
    if (first == m) return true;
    if (left == 0) return false;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (!detail::covers_bit(cover[c], first)) continue;
      detail::Mask next = covered;
      for (std::size_t w = 0; w < words; ++w) next[w] |= cover[c][w];
      chosen.push_back(candidates[c]);
      if (self(self, next, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(search, detail::Mask(words, 0), k)) return std::nullopt;
  return chosen;
}

/// A k-centre decision routine: cover(points, k, d) returns at most k centres
/// covering the points within factor * d, or nothing.
template <class S>
concept CoverSolver = requires(const S& s, std::span<const Point> pts, std::size_t k, double d) {
  { s.cover(pts, k, d) } -> std::same_as<std::optional<PointSet>>;
  { s.factor() } -> std::convertible_to<double>;
  { s.name() } -> std::convertible_to<const char*>;
};

struct GonzalezCover {
  Tolerance tol;

  double factor() const { return 2.0; }
  const char* name() const { return "gonzalez"; }
  std::optional<PointSet> cover(std::span<const Point> points, std::size_t k, double d) const {
    if (points.empty()) return PointSet{};
    KCentreResult r = gonzalez_k_centre(points, k);
    if (r.radius > factor() * d * (1.0 + tol.eps_predicate) + tol.eps_predicate) return std::nullopt;
    return std::move(r.centres);
  }
};

struct ExactCover {
  Tolerance tol;

  double factor() const { return 1.0; }
  const char* name() const { return "exact"; }
  std::optional<PointSet> cover(std::span<const Point> points, std::size_t k, double d) const {
    return exact_k_cover(points, k, d, tol);
  }
};

static_assert(CoverSolver<GonzalezCover>);
static_assert(CoverSolver<ExactCover>);

}  // namespace ihd
