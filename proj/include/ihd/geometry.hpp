#pragma once

// Planar kernel: points, discs, tolerance policy and the precise directed
// Hausdorff distance.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ihd {

/// Raised when an operation's precondition on its inputs does not hold.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised by the brute-force oracles when an instance exceeds their budget.
struct BudgetExceeded : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// Raised for input configurations the library deliberately does not solve.
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Tolerance {
  double eps_predicate = 1e-9;
  double eps_root = 1e-12;
  int boundary_samples = 1024;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point, Point) = default;
  // Lexicographic, used only for deterministic tie-breaking.
  friend constexpr bool operator<(Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline double squared_distance(Point a, Point b) {
  const Point d = a - b;
  return dot(d, d);
}
inline Point unit_from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline Point perpendicular(Point a) { return {-a.y, a.x}; }

struct Disc {
  Point centre;
  double radius = 0.0;

  friend constexpr bool operator==(const Disc&, const Disc&) = default;
};

using PointSet = std::vector<Point>;
using ImprecisePointSet = std::vector<Disc>;

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline void validate(std::span<const Point> points, const char* what) {
  for (const Point& p : points)
    if (!is_finite(p)) throw InvalidInput(std::string(what) + ": non-finite coordinate");
}

inline void validate(std::span<const Disc> discs, const char* what) {
  for (const Disc& d : discs) {
    if (!is_finite(d.centre) || !std::isfinite(d.radius))
      throw InvalidInput(std::string(what) + ": non-finite disc");
    if (d.radius < 0.0) throw InvalidInput(std::string(what) + ": negative radius");
  }
}

/// Radius-zero discs standing in for a precise point set.
inline ImprecisePointSet lift(std::span<const Point> points) {
  ImprecisePointSet out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back({p, 0.0});
  return out;
}

inline PointSet centres(std::span<const Disc> discs) {
  PointSet out;
  out.reserve(discs.size());
  for (const Disc& d : discs) out.push_back(d.centre);
  return out;
}

inline bool contains(const Disc& d, Point x, const Tolerance& tol = {}) {
  return distance(d.centre, x) <= d.radius + tol.eps_predicate;
}

/// Pairwise centre distance strictly greater than the sum of radii.
inline bool pairwise_disjoint(std::span<const Disc> discs) {
  for (std::size_t i = 0; i < discs.size(); ++i)
    for (std::size_t j = i + 1; j < discs.size(); ++j)
      if (distance(discs[i].centre, discs[j].centre) <= discs[i].radius + discs[j].radius)
        return false;
  return true;
}

/// True when every points[i] lies in discs[i].
inline bool is_realisation(std::span<const Point> points, std::span<const Disc> discs,
                           const Tolerance& tol = {}) {
  if (points.size() != discs.size()) return false;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!contains(discs[i], points[i], tol)) return false;
  return true;
}

inline double min_radius(std::span<const Disc> discs) {
  double r = std::numeric_limits<double>::infinity();
  for (const Disc& d : discs) r = std::min(r, d.radius);
  return r;
}

inline double max_radius(std::span<const Disc> discs) {
  double r = 0.0;
  for (const Disc& d : discs) r = std::max(r, d.radius);
  return r;
}

/// max over p in P of min over q in Q of |p - q|.
inline double directed_hausdorff(std::span<const Point> P, std::span<const Point> Q) {
  if (P.empty() || Q.empty()) throw InvalidInput("directed_hausdorff: empty point set");
  double worst = 0.0;
  for (const Point& p : P) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& q : Q) best = std::min(best, squared_distance(p, q));
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

struct CircleIntersection {
  bool coincident = false;
  std::vector<Point> points;
};

/// Intersections of the two boundary circles. Tangency within eps_predicate
/// yields exactly one point.
inline CircleIntersection circle_circle_intersections(const Disc& a, const Disc& b,
                                                      const Tolerance& tol = {}) {
  CircleIntersection out;
  const double eps = tol.eps_predicate;
  const Point delta = b.centre - a.centre;
  const double d = norm(delta);
  if (d <= eps) {
    out.coincident = std::abs(a.radius - b.radius) <= eps;
    return out;
  }
  const double outer = a.radius + b.radius;
  const double inner = std::abs(a.radius - b.radius);
  if (d > outer + eps || d < inner - eps) return out;

  const Point u = (1.0 / d) * delta;
  // Tangency: average the touching boundary points of both circles.
  auto touching = [&](double side_a, double side_b) {
    const Point from_a = a.centre + (side_a * a.radius) * u;
    const Point from_b = b.centre + (side_b * b.radius) * u;
    out.points.push_back(0.5 * (from_a + from_b));
  };
  if (std::abs(d - outer) <= eps) {
    touching(1.0, -1.0);
    return out;
  }
  if (std::abs(d - inner) <= eps) {
    const double s = a.radius >= b.radius ? 1.0 : -1.0;
    touching(s, s);
    return out;
  }
  const double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, a.radius * a.radius - along * along));
  const Point base = a.centre + along * u;
  const Point n = perpendicular(u);
  out.points.push_back(base + h * n);
  out.points.push_back(base - h * n);
  return out;
}

/// A point common to all discs, or nothing when the intersection is empty.
///
/// A non-empty intersection of closed discs contains either the centre of its
/// smallest member or a vertex where two boundary circles cross, so testing
/// those candidates is exact. The average of all passing candidates is
/// returned; it lies in the (convex) intersection and away from its boundary
/// whenever the intersection has interior.
inline std::optional<Point> discs_common_point(std::span<const Disc> discs,
                                               const Tolerance& tol = {}) {
  if (discs.empty()) return std::nullopt;
  auto inside_all = [&](Point x) {
    return std::all_of(discs.begin(), discs.end(),
                       [&](const Disc& d) { return contains(d, x, tol); });
  };
  Point sum{0.0, 0.0};
  std::size_t hits = 0;
  auto consider = [&](Point x) {
    if (inside_all(x)) {
      sum = sum + x;
      ++hits;
    }
  };
  for (const Disc& d : discs) consider(d.centre);
  for (std::size_t i = 0; i < discs.size(); ++i)
    for (std::size_t j = i + 1; j < discs.size(); ++j)
      for (Point x : circle_circle_intersections(discs[i], discs[j], tol).points) consider(x);
  if (hits == 0) return std::nullopt;
  return (1.0 / static_cast<double>(hits)) * sum;
}

inline Point closest_point_in_disc(Point x, const Disc& d) {
  const double dist = distance(x, d.centre);
  if (dist <= d.radius) return x;
  return d.centre + (d.radius / dist) * (x - d.centre);
}

/// Boundary point antipodal to x through the centre; ties at the centre pick
/// centre + (radius, 0).
inline Point farthest_point_in_disc(Point x, const Disc& d, const Tolerance& tol = {}) {
  const double dist = distance(x, d.centre);
  if (dist <= tol.eps_predicate) return d.centre + Point{d.radius, 0.0};
  return d.centre - (d.radius / dist) * (x - d.centre);
}

}  // namespace ihd
