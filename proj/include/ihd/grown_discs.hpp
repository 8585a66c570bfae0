#pragma once

// Approximate h_min(P, Q̃) for arbitrary discs.
//
// The decision step grows every disc by d, groups the points of P by the set
// of grown discs containing them, covers each group with at most |I| circles
// from a k-centre routine, and matches circles to discs of their key.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ihd/candidates.hpp"
#include "ihd/geometry.hpp"
#include "ihd/independent_sets.hpp"
#include "ihd/k_centre.hpp"
#include "ihd/matching.hpp"

namespace ihd {

/// Points of P lying in exactly the grown discs listed in `key`.
struct CellGroup {
  std::vector<std::size_t> key;
  std::vector<std::size_t> members;
};

struct CircleCover {
  Point centre;
  double radius = 0.0;
  std::vector<std::size_t> cell_key;
  std::optional<std::size_t> matched_disc;
  std::vector<std::size_t> assigned;  // P indices this circle is responsible for
};

struct ApproxResult {
  double value = 0.0;
  double guarantee_factor = 1.0;
  PointSet witness_Q;
  std::optional<double> accepted_d;
  std::string algorithm;
};

/// Groups by index set in lexicographic key order, or nothing when some point
/// lies outside every grown disc.
inline std::optional<std::vector<CellGroup>> cell_decomposition(std::span<const Point> P,
                                                                std::span<const Disc> Q, double d,
                                                                const Tolerance& tol = {}) {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t p = 0; p < P.size(); ++p) {
    std::vector<std::size_t> key;
    for (std::size_t i = 0; i < Q.size(); ++i)
      if (distance(P[p], Q[i].centre) <= Q[i].radius + d + tol.eps_predicate) key.push_back(i);
    if (key.empty()) return std::nullopt;
    groups[std::move(key)].push_back(p);
  }
  std::vector<CellGroup> out;
  for (auto& [key, members] : groups) out.push_back({key, std::move(members)});
  return out;
}

struct GrownDiscsDecision {
  bool feasible = false;
  PointSet witness;
  std::vector<CircleCover> circles;
  std::vector<CellGroup> groups;
};

struct GrownDiscsOptions {
  /// Throw std::logic_error if a cell key is larger than this.
  std::optional<std::size_t> max_key;
  /// Only search candidates strictly below this value.
  std::optional<double> below;
};

namespace detail {

/// How points outside the current cell get marked as covered by its circles.
enum class Marking {
  Grown,        // within (c + 2) d of the unmoved centre
  EveryMove,  // within (c + 2) d of the centre moved into any disc of the key
};

template <CoverSolver S>
GrownDiscsDecision grown_discs_attempt(std::span<const Point> P, std::span<const Disc> Q, double d, const S& solver,
                                       const Tolerance& tol, const GrownDiscsOptions& opt,
                                       const std::vector<CellGroup>& groups, Marking marking) {
  GrownDiscsDecision out;
  out.groups = groups;
  const double grown = (solver.factor() + 2.0) * d;
  const double reach = grown + tol.eps_predicate * std::max(1.0, grown);
  std::vector<char> covered(P.size(), 0);

  auto marks = [&](const CircleCover& circle, Point x) {
    if (marking == Marking::Grown) return distance(x, circle.centre) <= reach;
    return std::all_of(circle.cell_key.begin(), circle.cell_key.end(), [&](std::size_t i) {
      return distance(x, closest_point_in_disc(circle.centre, Q[i])) <= reach;
    });
  };

  for (const CellGroup& g : out.groups) {
    if (opt.max_key && g.key.size() > *opt.max_key)
      throw std::logic_error("grown discs: cell key exceeds " + std::to_string(*opt.max_key) + " discs");
    std::vector<std::size_t> pending;
    PointSet pts;
    for (std::size_t p : g.members)
      if (!covered[p]) {
        pending.push_back(p);
        pts.push_back(P[p]);
      }
    if (pending.empty()) continue;

    std::optional<PointSet> centres;
    for (std::size_t k = 1; k <= g.key.size() && !centres; ++k) centres = solver.cover(pts, k, d);
    if (!centres) return out;

    const std::size_t first = out.circles.size();
    for (Point x : *centres) out.circles.push_back({x, grown, g.key, std::nullopt, {}});
    for (std::size_t p : pending) {
      std::size_t best = first;
      for (std::size_t t = first; t < out.circles.size(); ++t)
        if (distance(P[p], out.circles[t].centre) < distance(P[p], out.circles[best].centre)) best = t;
      out.circles[best].assigned.push_back(p);
      covered[p] = 1;
    }
    for (std::size_t t = first; t < out.circles.size(); ++t)
      for (std::size_t p = 0; p < P.size(); ++p)
        if (!covered[p] && marks(out.circles[t], P[p])) {
          out.circles[t].assigned.push_back(p);
          covered[p] = 1;
        }
  }

  // Prefer discs the circle can move into without dropping an assigned point;
  // fall back to every disc of the key.
  auto keeps_points = [&](const CircleCover& circle, std::size_t i) {
    const Point moved = closest_point_in_disc(circle.centre, Q[i]);
    return std::all_of(circle.assigned.begin(), circle.assigned.end(),
                       [&](std::size_t p) { return distance(P[p], moved) <= reach; });
  };
  std::vector<std::vector<std::size_t>> good(out.circles.size()), any(out.circles.size());
  for (std::size_t t = 0; t < out.circles.size(); ++t)
    for (std::size_t i : out.circles[t].cell_key) {
      any[t].push_back(i);
      if (keeps_points(out.circles[t], i)) good[t].push_back(i);
    }
  BipartiteMatching m = maximum_matching(good, Q.size());
  if (!m.saturates_left()) m = maximum_matching(any, Q.size());
  if (!m.saturates_left()) return out;

  out.witness = centres(Q);
  for (std::size_t t = 0; t < out.circles.size(); ++t) {
    CircleCover& circle = out.circles[t];
    circle.matched_disc = m.left_to_right[t];
    circle.centre = closest_point_in_disc(circle.centre, Q[*circle.matched_disc]);
    out.witness[*circle.matched_disc] = circle.centre;
  }
  out.feasible = directed_hausdorff(P, out.witness) <= reach;
  return out;
}

}  // namespace detail

/// Either a realisation with h <= (c + 2) d or infeasible. Circles first mark
/// every point within (c + 2) d of their unmoved centre. Moving a circle into
/// its disc can leave such a point farther away, so when the witness misses
/// the bound a second pass marks only points that stay covered whichever disc
/// of the key the circle moves into.
template <CoverSolver S>
GrownDiscsDecision grown_discs_decide(std::span<const Point> P, std::span<const Disc> Q, double d,
                                      const S& solver, const Tolerance& tol = {},
                                      const GrownDiscsOptions& opt = {}) {
  auto groups = cell_decomposition(P, Q, d, tol);
  if (!groups) return {};
  auto first = detail::grown_discs_attempt(P, Q, d, solver, tol, opt, *groups, detail::Marking::Grown);
  if (first.feasible) return first;
  auto second = detail::grown_discs_attempt(P, Q, d, solver, tol, opt, *groups, detail::Marking::EveryMove);
  return second.feasible ? second : first;
}

namespace detail {

template <CoverSolver S>
std::optional<ApproxResult> grown_discs_search(std::span<const Point> P, std::span<const Disc> Q,
                                               const S& solver, const Tolerance& tol,
                                               const GrownDiscsOptions& opt) {
  std::vector<double> values;
  for (double v : candidate_distances(P, Q, tol))
    if (!opt.below || v < *opt.below) values.push_back(v);

  std::size_t lo = 0, hi = values.size();
  std::optional<GrownDiscsDecision> found;
  double found_d = 0.0;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    auto decision = grown_discs_decide(P, Q, values[mid], solver, tol, opt);
    if (decision.feasible) {
      hi = mid;
      found = std::move(decision);
      found_d = values[mid];
    } else {
      lo = mid + 1;
    }
  }
  if (!found) return std::nullopt;
  ApproxResult out;
  out.witness_Q = std::move(found->witness);
  out.value = directed_hausdorff(P, out.witness_Q);
  out.guarantee_factor = solver.factor() + 2.0;
  out.accepted_d = found_d;
  out.algorithm = std::string("grown-discs/") + solver.name();
  return out;
}

}  // namespace detail

/// Binary search over the candidate values for the smallest d the decision
/// accepts; the witness is within (c + 2) of the optimum.
template <CoverSolver S>
ApproxResult grown_discs(std::span<const Point> P, std::span<const Disc> Q, const S& solver,
                         const Tolerance& tol = {}) {
  if (Q.empty()) throw InvalidInput("grown_discs: no discs");
  validate(P, "grown_discs P");
  validate(Q, "grown_discs Q");
  if (P.empty()) return {0.0, solver.factor() + 2.0, centres(Q), 0.0, std::string("grown-discs/") + solver.name()};
  auto out = detail::grown_discs_search(P, Q, solver, tol, {});
  if (!out) throw std::logic_error("grown_discs: no candidate value was accepted");
  return *out;
}

/// h(P, centres of Q̃).
inline double centre_points(std::span<const Point> P, std::span<const Disc> Q) {
  if (P.empty() || Q.empty()) throw InvalidInput("centre_points: empty input");
  return directed_hausdorff(P, centres(Q));
}

inline bool equal_radii(std::span<const Disc> Q, const Tolerance& tol = {}) {
  const double hi = max_radius(Q);
  return hi - min_radius(Q) <= tol.eps_predicate * std::max(1.0, hi);
}

/// Best available h_min(P, Q̃): exact below the small threshold on disjoint
/// discs, factor 3 on disjoint equal discs, factor 4 otherwise.
inline ApproxResult hmin_dispatch(std::span<const Point> P, std::span<const Disc> Q,
                                  const Tolerance& tol = {}) {
  if (Q.empty()) throw InvalidInput("hmin_dispatch: no discs");
  validate(P, "hmin_dispatch P");
  validate(Q, "hmin_dispatch Q");
  if (P.empty()) return {0.0, 1.0, centres(Q), 0.0, "empty"};

  const bool disjoint = pairwise_disjoint(Q);
  if (disjoint) {
    IndependentSetsResult is = independent_sets(P, Q, tol);
    if (!is.threshold_exceeded) return {is.value, 1.0, std::move(is.witness), is.value, "independent-sets"};
  }

  if (disjoint && equal_radii(Q, tol)) {
    const double r = max_radius(Q);
    ApproxResult centre{centre_points(P, Q), 3.0, centres(Q), std::nullopt, "centre-points"};
    if (centre.value > 1.5 * r) return centre;
    // Below r/2 every cell meets at most four discs. If the optimum is at
    // least r/2 the centre placement is already within factor 3.
    GrownDiscsOptions opt{4, 0.5 * r};
    auto grown = detail::grown_discs_search(P, Q, ExactCover{tol}, tol, opt);
    if (!grown || grown->value >= centre.value) return centre;
    grown->guarantee_factor = 3.0;
    return *grown;
  }

  return grown_discs(P, Q, GonzalezCover{tol}, tol);
}

}  // namespace ihd
