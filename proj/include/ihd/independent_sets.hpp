#pragma once

// Exact h_min(P, Q̃) for pairwise disjoint discs when the answer is small.
//
// Below SmallThreshold::value(r_min) every p(d) meets at most two discs and
// points whose discs meet different pairs of regions cannot share a
// realisation point. The decision procedure therefore only has to commit
// degree-1 points to their region, settle pairs of regions locally where the
// choice is forced, and match the remaining pair buckets to regions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ihd/candidates.hpp"
#include "ihd/geometry.hpp"
#include "ihd/matching.hpp"

namespace ihd {

struct SmallThreshold {
  /// Largest d for which the local pair analysis is exact.
  static double value(double r) { return r * (std::sqrt(5.0 - 2.0 * std::sqrt(3.0)) - 1.0) / 2.0; }
  /// Smallest radius of a disc that can meet three disjoint discs of radius r.
  static double degree3(double r) { return r * (2.0 / std::sqrt(3.0) - 1.0); }
};

/// F_i: the part of disc `base` where q_i may still go.
struct FeasibleRegion {
  std::size_t base = 0;
  std::vector<Disc> constraints;  // p(d) discs, radius = d
  std::vector<std::size_t> children;
};

/// Degree-2 points whose discs meet exactly regions `first` and `second`.
struct PairBucket {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<std::size_t> members;
};

struct IndependentSetsState {
  PointSet points;
  ImprecisePointSet discs;
  double d = 0.0;
  std::vector<FeasibleRegion> regions;
  std::vector<std::size_t> residual;  // unmatched points
  std::vector<PairBucket> buckets;    // deferred to matching
  std::vector<std::optional<std::size_t>> bucket_region;
  bool feasible = true;

  Disc reach(std::size_t p) const { return {points[p], d}; }

  std::vector<Disc> region_discs(std::size_t i) const {
    std::vector<Disc> out{discs[regions[i].base]};
    out.insert(out.end(), regions[i].constraints.begin(), regions[i].constraints.end());
    return out;
  }

  /// A point of F_i that also lies in p(d) for every listed point.
  std::optional<Point> stab(std::size_t i, std::span<const std::size_t> members,
                            const Tolerance& tol) const {
    auto all = region_discs(i);
    for (std::size_t p : members) all.push_back(reach(p));
    return discs_common_point(all, tol);
  }

  std::vector<std::size_t> meeting_regions(std::size_t p, const Tolerance& tol) const {
    std::vector<std::size_t> out;
    const std::size_t one[] = {p};
    for (std::size_t i = 0; i < regions.size(); ++i) {
      // Cheap reject against the base disc before the exact test.
      const Disc& q = discs[regions[i].base];
      if (distance(q.centre, points[p]) > q.radius + d + tol.eps_predicate) continue;
      if (stab(i, one, tol)) out.push_back(i);
    }
    return out;
  }

  void commit(std::size_t i, std::span<const std::size_t> members) {
    for (std::size_t p : members) {
      regions[i].constraints.push_back(reach(p));
      regions[i].children.push_back(p);
    }
    std::erase_if(residual, [&](std::size_t p) {
      return std::find(members.begin(), members.end(), p) != members.end();
    });
  }
};

/// Fresh state: F_i = q̃_i, no children, every point residual.
inline IndependentSetsState make_independent_sets_state(std::span<const Point> P,
                                                        std::span<const Disc> Q, double d,
                                                        const Tolerance& tol = {}) {
  if (!pairwise_disjoint(Q)) throw InvalidInput("independent sets: discs must be pairwise disjoint");
  IndependentSetsState s;
  s.points.assign(P.begin(), P.end());
  s.discs.assign(Q.begin(), Q.end());
  s.d = d;
  for (std::size_t i = 0; i < Q.size(); ++i) s.regions.push_back({i, {}, {}});
  for (std::size_t p = 0; p < P.size(); ++p) {
    s.residual.push_back(p);
    std::size_t degree = 0;
    for (const Disc& q : Q)
      if (distance(q.centre, P[p]) <= q.radius + d + tol.eps_predicate) ++degree;
    if (degree > 2)
      throw InvalidInput("independent sets: p(d) meets three discs; d is above the degree bound");
  }
  return s;
}

/// Commits every residual point whose p(d) meets exactly one region until none
/// is left. Returns false, and marks the state infeasible, when a point meets
/// no region or a region empties.
inline bool remove_degree_1(IndependentSetsState& s, const Tolerance& tol = {}) {
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t p : s.residual) {
      const auto regs = s.meeting_regions(p, tol);
      if (regs.empty()) {
        s.feasible = false;
        return false;
      }
      if (regs.size() == 1) {
        const std::size_t one[] = {p};
        s.commit(regs.front(), one);
        if (!discs_common_point(s.region_discs(regs.front()), tol)) {
          s.feasible = false;
          return false;
        }
        progress = true;
        break;
      }
    }
  }
  return true;
}

/// Groups residual (degree-2) points by the pair of regions they meet.
inline std::vector<PairBucket> pair_buckets(const IndependentSetsState& s,
                                            const Tolerance& tol = {}) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t p : s.residual) {
    const auto regs = s.meeting_regions(p, tol);
    if (regs.size() != 2) continue;
    groups[{regs[0], regs[1]}].push_back(p);
  }
  std::vector<PairBucket> out;
  for (auto& [key, members] : groups) out.push_back({key.first, key.second, std::move(members)});
  return out;
}

/// Settles every pair bucket whose stabbing is forced, re-running the degree-1
/// pass after each restriction. Buckets that either region could stab alone
/// are left in s.buckets for the matching stage.
inline bool remove_degree_2(IndependentSetsState& s, const Tolerance& tol = {}) {
  for (;;) {
    if (!remove_degree_1(s, tol)) return false;
    auto buckets = pair_buckets(s, tol);
    bool forced = false;
    for (const PairBucket& b : buckets) {
      const bool by_first = s.stab(b.first, b.members, tol).has_value();
      const bool by_second = s.stab(b.second, b.members, tol).has_value();
      if (by_first && by_second) continue;
      if (by_first || by_second) {
        s.commit(by_first ? b.first : b.second, b.members);
        forced = true;
        break;
      }
      // Needs one point from each region: search the bipartitions.
      const std::size_t k = b.members.size();
      if (k > 20) throw InvalidInput("independent sets: pair bucket too large for split search");
      std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> split;
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k) && !split; ++mask) {
        std::vector<std::size_t> to_first, to_second;
        for (std::size_t t = 0; t < k; ++t)
          ((mask >> t) & 1 ? to_first : to_second).push_back(b.members[t]);
        if (s.stab(b.first, to_first, tol) && s.stab(b.second, to_second, tol))
          split.emplace(std::move(to_first), std::move(to_second));
      }
      if (!split) {
        s.feasible = false;
        return false;
      }
      // First working bipartition in mask order.
      s.commit(b.first, split->first);
      s.commit(b.second, split->second);
      forced = true;
      break;
    }
    if (!forced) {
      s.buckets = std::move(buckets);
      return true;
    }
  }
}

/// Bucket/region bipartite graph with an edge wherever the region can stab
/// the whole bucket; feasible iff every bucket is matched. Matched buckets
/// are committed to their region.
inline bool build_graph_and_match(IndependentSetsState& s, const Tolerance& tol = {}) {
  std::vector<std::vector<std::size_t>> adjacency(s.buckets.size());
  for (std::size_t b = 0; b < s.buckets.size(); ++b)
    for (std::size_t i : {s.buckets[b].first, s.buckets[b].second})
      if (s.stab(i, s.buckets[b].members, tol)) adjacency[b].push_back(i);

  const BipartiteMatching m = maximum_matching(adjacency, s.regions.size());
  s.bucket_region = m.left_to_right;
  if (!m.saturates_left()) {
    s.feasible = false;
    return false;
  }
  for (std::size_t b = 0; b < s.buckets.size(); ++b) s.commit(*m.left_to_right[b], s.buckets[b].members);
  return true;
}

struct IndependentSetsDecision {
  bool feasible = false;
  IndependentSetsState state;
};

/// Whether h_min(P, Q̃) <= d, for d below the small threshold.
inline IndependentSetsDecision independent_sets_decide(std::span<const Point> P,
                                                       std::span<const Disc> Q, double d,
                                                       const Tolerance& tol = {}) {
  IndependentSetsDecision out{false, make_independent_sets_state(P, Q, d, tol)};
  out.feasible = remove_degree_2(out.state, tol) && build_graph_and_match(out.state, tol);
  out.state.feasible = out.feasible;
  return out;
}

/// One realisation point per region, inside F_i.
inline PointSet independent_sets_witness(const IndependentSetsState& s, const Tolerance& tol = {}) {
  PointSet out;
  for (std::size_t i = 0; i < s.regions.size(); ++i) {
    const auto x = discs_common_point(s.region_discs(i), tol);
    out.push_back(x ? *x : s.discs[s.regions[i].base].centre);
  }
  return out;
}

struct IndependentSetsResult {
  bool threshold_exceeded = false;
  double threshold = 0.0;
  double value = 0.0;  // meaningful unless threshold_exceeded
  PointSet witness;
};

/// Exact h_min(P, Q̃) if it is below SmallThreshold::value(r_min), otherwise
/// the threshold-exceeded signal.
inline IndependentSetsResult independent_sets(std::span<const Point> P, std::span<const Disc> Q,
                                              const Tolerance& tol = {}) {
  if (P.empty() || Q.empty()) throw InvalidInput("independent_sets: empty input");
  validate(P, "independent_sets P");
  validate(Q, "independent_sets Q");
  if (!pairwise_disjoint(Q)) throw InvalidInput("independent_sets: discs must be pairwise disjoint");

  IndependentSetsResult out;
  out.threshold = SmallThreshold::value(min_radius(Q));
  std::vector<double> values;
  for (double v : candidate_distances(P, Q, tol))
    if (v < out.threshold) values.push_back(v);

  // Smallest feasible candidate, assuming the predicate is monotone along the list.
  std::size_t lo = 0, hi = values.size();
  std::optional<IndependentSetsDecision> found;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    auto decision = independent_sets_decide(P, Q, values[mid], tol);
    if (decision.feasible) {
      hi = mid;
      found = std::move(decision);
    } else {
      lo = mid + 1;
    }
  }
  if (lo == values.size()) {
    out.threshold_exceeded = true;
    return out;
  }
  if (!found || found->state.d != values[lo]) found = independent_sets_decide(P, Q, values[lo], tol);
  out.value = values[lo];
  out.witness = independent_sets_witness(found->state, tol);
  return out;
}

}  // namespace ihd
