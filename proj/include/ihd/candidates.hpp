#pragma once

// Finite candidate set for h_min(P, Q̃).
//
// In an optimal realisation every disc serves some subset of P, and the
// distance it contributes is a disc-constrained minimum enclosing radius of
// that subset. That radius is fixed by one point (closest point of the disc),
// two points (the bisector meets the boundary, or the unconstrained midpoint
// is inside the disc) or three points (circumcentre inside the disc).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <variant>
#include <vector>

#include "ihd/geometry.hpp"

namespace ihd {

struct OnePoint {
  std::size_t p = 0;
  std::size_t disc = 0;
};
struct TwoPoint {
  std::size_t p = 0, p2 = 0;
  std::size_t disc = 0;
  Point location;
};
struct ThreePoint {
  std::size_t p = 0, p2 = 0, p3 = 0;
  std::size_t disc = 0;
  Point circumcentre;
};

struct CandidateValue {
  double value = 0.0;
  std::variant<OnePoint, TwoPoint, ThreePoint> provenance;
};

namespace detail {

inline std::optional<Point> circumcentre(Point a, Point b, Point c, const Tolerance& tol) {
  const Point ab = b - a, ac = c - a;
  const double den = 2.0 * cross(ab, ac);
  const double scale = std::max({dot(ab, ab), dot(ac, ac), 1.0});
  if (std::abs(den) <= tol.eps_predicate * scale) return std::nullopt;
  const double ab2 = dot(ab, ab), ac2 = dot(ac, ac);
  return a + Point{(ac.y * ab2 - ab.y * ac2) / den, (ab.x * ac2 - ac.x * ab2) / den};
}

}  // namespace detail

/// Every candidate value, ascending and deduplicated within eps_predicate.
inline std::vector<CandidateValue> candidate_values(std::span<const Point> P,
                                                    std::span<const Disc> Q,
                                                    const Tolerance& tol = {}) {
  std::vector<CandidateValue> all;
  const std::size_t m = P.size();
  for (std::size_t j = 0; j < Q.size(); ++j) {
    const Disc& q = Q[j];
    for (std::size_t a = 0; a < m; ++a)
      all.push_back({std::max(0.0, distance(P[a], q.centre) - q.radius), OnePoint{a, j}});

    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        const Point mid = 0.5 * (P[a] + P[b]);
        const Point along = P[b] - P[a];
        const double len = norm(along);
        if (len <= tol.eps_predicate) continue;
        if (contains(q, mid, tol)) all.push_back({0.5 * len, TwoPoint{a, b, j, mid}});
        // Bisector mid + s*v meets the boundary where s^2 + 2 s v.w + |w|^2 - r^2 = 0.
        const Point v = (1.0 / len) * perpendicular(along);
        const Point w = mid - q.centre;
        const double half_b = dot(v, w);
        double disc = half_b * half_b - (dot(w, w) - q.radius * q.radius);
        if (disc < -tol.eps_predicate) continue;
        disc = std::max(0.0, disc);
        const double root = std::sqrt(disc);
        for (double s : {-half_b - root, -half_b + root}) {
          const Point x = mid + s * v;
          all.push_back({distance(x, P[a]), TwoPoint{a, b, j, x}});
          if (root == 0.0) break;
        }
      }

    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::size_t c = b + 1; c < m; ++c) {
          const auto cc = detail::circumcentre(P[a], P[b], P[c], tol);
          if (cc && contains(q, *cc, tol))
            all.push_back({distance(*cc, P[a]), ThreePoint{a, b, c, j, *cc}});
        }
  }

  std::stable_sort(all.begin(), all.end(),
                   [](const CandidateValue& x, const CandidateValue& y) { return x.value < y.value; });
  std::vector<CandidateValue> out;
  for (const auto& c : all)
    if (out.empty() || c.value > out.back().value + tol.eps_predicate) out.push_back(c);
  return out;
}

/// Just the ascending candidate distances.
inline std::vector<double> candidate_distances(std::span<const Point> P, std::span<const Disc> Q,
                                               const Tolerance& tol = {}) {
  std::vector<double> out;
  for (const auto& c : candidate_values(P, Q, tol)) out.push_back(c.value);
  return out;
}

}  // namespace ihd
