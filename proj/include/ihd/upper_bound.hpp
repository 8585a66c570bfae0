#pragma once

// Tight upper bound h_max for every combination of precise and imprecise
// sides.
//
// The value function of the inverted additive Voronoi diagram of Q̃ is
//
//   f(x) = min_j (|x - c_j| + r_j),
//
// the distance from x to the closest "farthest point" over all discs of Q̃.
// h_max is the maximum of f over the union of the P discs. Each piece of f is
// convex, so on a disc the maximum sits at a diagram vertex, at a crossing of
// a diagram edge with the disc boundary, or at the boundary point antipodal to
// the site owning the disc centre. The diagram is never built explicitly:
// vertices come from solving every site triple and crossings from a sampled
// walk around each host boundary.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <variant>
#include <vector>

#include "ihd/geometry.hpp"

namespace ihd {

struct AugmentedValue {
  double value = 0.0;
  std::size_t index = 0;
};

/// min_j (|x - c_j| + r_j) and its argmin; ties go to the lowest index.
inline AugmentedValue augmented_value(Point x, std::span<const Disc> Q) {
  if (Q.empty()) throw InvalidInput("augmented_value: empty disc set");
  AugmentedValue best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t j = 0; j < Q.size(); ++j) {
    const double v = distance(x, Q[j].centre) + Q[j].radius;
    if (v < best.value) best = {v, j};
  }
  return best;
}

struct VertexPlacement {
  std::array<std::size_t, 3> sites{};
};
struct EdgeCrossingPlacement {
  std::array<std::size_t, 2> sites{};
};
struct AntipodalPlacement {
  std::size_t site = 0;
};

/// Alternative order doubles as the tie-break order Vertex < EdgeCrossing < Antipodal.
using PlacementKind = std::variant<VertexPlacement, EdgeCrossingPlacement, AntipodalPlacement>;

struct CandidatePlacement {
  Point location;
  PlacementKind kind;
  std::size_t host = 0;
  double value = 0.0;
};

/// A point where three sites have equal, globally minimal augmented distance.
struct DiagramVertex {
  Point location;
  double value = 0.0;
  std::array<std::size_t, 3> sites{};
};

namespace detail {

inline double scaled_eps(double magnitude, const Tolerance& tol) {
  return tol.eps_predicate * std::max(1.0, std::abs(magnitude));
}

// Newton polish of |X - c_a| + r_a = t for the three sites of a triple.
inline bool polish_vertex(std::span<const Disc> Q, const std::array<std::size_t, 3>& s, Point& X,
                          double& t) {
  for (int iter = 0; iter < 4; ++iter) {
    double J[3][3];
    double F[3];
    for (int a = 0; a < 3; ++a) {
      const Disc& d = Q[s[a]];
      const Point diff = X - d.centre;
      const double len = norm(diff);
      if (len < 1e-300) return false;
      F[a] = len + d.radius - t;
      J[a][0] = diff.x / len;
      J[a][1] = diff.y / len;
      J[a][2] = -1.0;
    }
    const double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                       J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                       J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    if (std::abs(det) < 1e-14) return true;  // keep the algebraic root unpolished
    // Cramer's rule for J * delta = -F.
    double delta[3];
    for (int col = 0; col < 3; ++col) {
      double M[3][3];
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) M[r][c] = (c == col) ? -F[r] : J[r][c];
      delta[col] = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                    M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                    M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])) /
                   det;
    }
    X = X + Point{delta[0], delta[1]};
    t += delta[2];
    if (std::abs(delta[0]) + std::abs(delta[1]) + std::abs(delta[2]) < 1e-15 * (1.0 + std::abs(t)))
      break;
  }
  return true;
}

// Solutions of |X - c_a| = t - r_a for a = i, j, k with t >= max r_a.
//
// Subtracting the squared equation of site i from those of j and k leaves two
// equations linear in (x, y, t). Their solution line (x, y, t) = base + s * dir
// is substituted back into the equation of site i, giving a quadratic in s.
inline std::vector<std::pair<Point, double>> solve_triple(std::span<const Disc> Q,
                                                          const std::array<std::size_t, 3>& s,
                                                          const Tolerance& tol) {
  std::vector<std::pair<Point, double>> out;
  const Point origin = Q[s[0]].centre;
  const double ri = Q[s[0]].radius;
  double row[2][3];
  double rhs[2];
  for (int e = 0; e < 2; ++e) {
    const Disc& d = Q[s[e + 1]];
    const Point c = d.centre - origin;
    row[e][0] = 2.0 * c.x;
    row[e][1] = 2.0 * c.y;
    row[e][2] = -2.0 * (d.radius - ri);
    rhs[e] = dot(c, c) - d.radius * d.radius + ri * ri;
  }
  const double dir[3] = {row[0][1] * row[1][2] - row[0][2] * row[1][1],
                         row[0][2] * row[1][0] - row[0][0] * row[1][2],
                         row[0][0] * row[1][1] - row[0][1] * row[1][0]};
  const double dir_len2 = dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2];
  if (dir_len2 < 1e-24) return out;

  // Minimum-norm particular solution base = R^T (R R^T)^{-1} rhs.
  const double g00 = row[0][0] * row[0][0] + row[0][1] * row[0][1] + row[0][2] * row[0][2];
  const double g01 = row[0][0] * row[1][0] + row[0][1] * row[1][1] + row[0][2] * row[1][2];
  const double g11 = row[1][0] * row[1][0] + row[1][1] * row[1][1] + row[1][2] * row[1][2];
  const double gdet = g00 * g11 - g01 * g01;
  if (std::abs(gdet) < 1e-24) return out;
  const double w0 = (g11 * rhs[0] - g01 * rhs[1]) / gdet;
  const double w1 = (g00 * rhs[1] - g01 * rhs[0]) / gdet;
  double base[3];
  for (int c = 0; c < 3; ++c) base[c] = row[0][c] * w0 + row[1][c] * w1;

  const double bt = base[2] - ri;
  const double qa = dir[0] * dir[0] + dir[1] * dir[1] - dir[2] * dir[2];
  const double qb = 2.0 * (base[0] * dir[0] + base[1] * dir[1] - bt * dir[2]);
  const double qc = base[0] * base[0] + base[1] * base[1] - bt * bt;

  std::vector<double> roots;
  if (std::abs(qa) < 1e-14 * dir_len2) {
    if (std::abs(qb) > 1e-300) roots.push_back(-qc / qb);
  } else {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) {
      if (disc > -1e-12 * qb * qb) roots.push_back(-qb / (2.0 * qa));
    } else {
      // Numerically stable pair of roots.
      const double sq = std::sqrt(disc);
      const double qq = -0.5 * (qb + std::copysign(sq, qb));
      if (std::abs(qq) > 1e-300) roots.push_back(qc / qq);
      roots.push_back(qq / qa);
    }
  }

  const double rmax = std::max({Q[s[0]].radius, Q[s[1]].radius, Q[s[2]].radius});
  for (double sv : roots) {
    Point X = origin + Point{base[0] + sv * dir[0], base[1] + sv * dir[1]};
    double t = base[2] + sv * dir[2];
    if (!std::isfinite(t) || !is_finite(X)) continue;
    if (t < rmax - scaled_eps(t, tol)) continue;
    if (!polish_vertex(Q, s, X, t)) continue;
    bool consistent = true;
    for (std::size_t a : s) {
      const double v = distance(X, Q[a].centre) + Q[a].radius;
      if (std::abs(v - t) > scaled_eps(t, tol)) consistent = false;
    }
    if (consistent) out.emplace_back(X, t);
  }
  return out;
}

}  // namespace detail

/// All vertices of the inverted additive Voronoi diagram of Q̃: points where
/// three sites i < j < k tie and no fourth site is strictly smaller.
inline std::vector<DiagramVertex> diagram_vertices(std::span<const Disc> Q,
                                                   const Tolerance& tol = {}) {
  std::vector<DiagramVertex> out;
  const std::size_t n = Q.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::array<std::size_t, 3> sites{i, j, k};
        for (auto [X, t] : detail::solve_triple(Q, sites, tol)) {
          const double limit = t - detail::scaled_eps(t, tol);
          bool global = true;
          for (std::size_t a = 0; a < n && global; ++a)
            if (distance(X, Q[a].centre) + Q[a].radius < limit) global = false;
          if (global) out.push_back({X, augmented_value(X, Q).value, sites});
        }
      }
  return out;
}

namespace detail {

inline void edge_crossings(const Disc& host, std::size_t host_index, std::span<const Disc> Q,
                           const Tolerance& tol, std::vector<CandidatePlacement>& out) {
  const int samples = std::max(8, tol.boundary_samples);
  const double step = 2.0 * std::numbers::pi / samples;
  auto at = [&](double theta) { return host.centre + host.radius * unit_from_angle(theta); };
  auto site_value = [&](std::size_t a, double theta) {
    return distance(at(theta), Q[a].centre) + Q[a].radius;
  };

  auto resolve = [&](auto&& self, double lo, std::size_t a, double hi, std::size_t b,
                     int depth) -> void {
    if (a == b || depth > 24) return;
    // a is minimal at lo, b at hi; bisect on their signed difference.
    double l = lo, h = hi;
    while (h - l > tol.eps_root) {
      const double mid = 0.5 * (l + h);
      if (site_value(a, mid) - site_value(b, mid) <= 0.0)
        l = mid;
      else
        h = mid;
    }
    const double root = 0.5 * (l + h);
    const Point x = at(root);
    const AugmentedValue best = augmented_value(x, Q);
    const double va = site_value(a, root);
    if (va <= best.value + scaled_eps(va, tol)) {
      out.push_back({x, EdgeCrossingPlacement{{std::min(a, b), std::max(a, b)}}, host_index,
                     best.value});
      return;
    }
    self(self, lo, a, root, best.index, depth + 1);
    self(self, root, best.index, hi, b, depth + 1);
  };

  std::vector<std::size_t> owner(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) owner[k] = augmented_value(at(k * step), Q).index;
  for (int k = 0; k < samples; ++k) {
    const std::size_t next = (k + 1) % samples;
    if (owner[k] != owner[next]) resolve(resolve, k * step, owner[k], (k + 1) * step, owner[next], 0);
  }
}

inline std::vector<CandidatePlacement> candidates_with(const Disc& host, std::size_t host_index,
                                                       std::span<const Disc> Q,
                                                       std::span<const DiagramVertex> vertices,
                                                       const Tolerance& tol) {
  std::vector<CandidatePlacement> out;
  if (host.radius <= 0.0) {
    const AugmentedValue v = augmented_value(host.centre, Q);
    out.push_back({host.centre, AntipodalPlacement{v.index}, host_index, v.value});
    return out;
  }
  for (const DiagramVertex& v : vertices)
    if (contains(host, v.location, tol))
      out.push_back({v.location, VertexPlacement{v.sites}, host_index, v.value});

  edge_crossings(host, host_index, Q, tol, out);

  // Antipode of the site owning the host centre. Sites tied there within
  // tolerance all contribute; any other site's antipode lies outside its own cell.
  const AugmentedValue at_centre = augmented_value(host.centre, Q);
  for (std::size_t a = 0; a < Q.size(); ++a) {
    const double v = distance(host.centre, Q[a].centre) + Q[a].radius;
    if (a != at_centre.index && v > at_centre.value + scaled_eps(v, tol)) continue;
    const Point x = farthest_point_in_disc(Q[a].centre, host, tol);
    out.push_back({x, AntipodalPlacement{a}, host_index, augmented_value(x, Q).value});
  }
  return out;
}

// Strict weak order used when values tie: host, kind, location.
inline bool placement_precedes(const CandidatePlacement& a, const CandidatePlacement& b) {
  if (a.host != b.host) return a.host < b.host;
  if (a.kind.index() != b.kind.index()) return a.kind.index() < b.kind.index();
  return a.location < b.location;
}

}  // namespace detail

/// Locally optimal placements of a point of `host` maximising the augmented value.
inline std::vector<CandidatePlacement> enumerate_candidate_placements(const Disc& host,
                                                                      std::span<const Disc> Q,
                                                                      const Tolerance& tol = {}) {
  if (Q.empty()) throw InvalidInput("enumerate_candidate_placements: empty disc set");
  const auto vertices = diagram_vertices(Q, tol);
  return detail::candidates_with(host, 0, Q, vertices, tol);
}

struct UpperBoundResult {
  double value = 0.0;
  std::size_t critical_index = 0;
  CandidatePlacement placement;
  PointSet witness_P;
  PointSet witness_Q;
};

/// h_max(P̃, Q̃) with witness realisations. Precise sides are passed as
/// radius-zero discs (see lift()).
inline UpperBoundResult hmax(std::span<const Disc> P, std::span<const Disc> Q,
                             const Tolerance& tol = {}) {
  if (P.empty() || Q.empty()) throw InvalidInput("hmax: empty side");
  validate(P, "hmax P");
  validate(Q, "hmax Q");

  const bool any_imprecise_host =
      std::any_of(P.begin(), P.end(), [](const Disc& d) { return d.radius > 0.0; });
  const std::vector<DiagramVertex> vertices =
      any_imprecise_host ? diagram_vertices(Q, tol) : std::vector<DiagramVertex>{};

  std::vector<CandidatePlacement> all;
  for (std::size_t i = 0; i < P.size(); ++i) {
    auto c = detail::candidates_with(P[i], i, Q, vertices, tol);
    all.insert(all.end(), c.begin(), c.end());
  }

  double best_value = -std::numeric_limits<double>::infinity();
  for (const auto& c : all) best_value = std::max(best_value, c.value);
  const CandidatePlacement* chosen = nullptr;
  for (const auto& c : all) {
    if (c.value < best_value - detail::scaled_eps(best_value, tol)) continue;
    if (!chosen || detail::placement_precedes(c, *chosen)) chosen = &c;
  }

  UpperBoundResult result;
  result.placement = *chosen;
  result.critical_index = chosen->host;
  result.witness_P = centres(P);
  result.witness_P[chosen->host] = chosen->location;
  result.witness_Q.reserve(Q.size());
  for (const Disc& q : Q) result.witness_Q.push_back(farthest_point_in_disc(chosen->location, q, tol));
  // Report the realised distance so the witness reproduces the value exactly.
  result.value = directed_hausdorff(result.witness_P, result.witness_Q);
  return result;
}

inline UpperBoundResult hmax(std::span<const Point> P, std::span<const Disc> Q,
                             const Tolerance& tol = {}) {
  return hmax(lift(P), Q, tol);
}
inline UpperBoundResult hmax(std::span<const Disc> P, std::span<const Point> Q,
                             const Tolerance& tol = {}) {
  return hmax(P, lift(Q), tol);
}
inline UpperBoundResult hmax(std::span<const Point> P, std::span<const Point> Q,
                             const Tolerance& tol = {}) {
  return hmax(lift(P), lift(Q), tol);
}

}  // namespace ihd
