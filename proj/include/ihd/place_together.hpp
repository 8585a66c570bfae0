#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>

#include "ihd/geometry.hpp"

namespace ihd {

/// A lower-bound value together with the realisation that attains it.
struct LowerBoundResult {
  double value = 0.0;
  PointSet witness;
};

/// h_min(P̃, Q): every imprecise point moves as close as it can to its
/// nearest precise point; the discs do not interact.
inline LowerBoundResult place_together(std::span<const Disc> P, std::span<const Point> Q,
                                       const Tolerance& = {}) {
  if (P.empty() || Q.empty()) throw InvalidInput("place_together: empty input");
  validate(P, "place_together P");
  validate(Q, "place_together Q");
  LowerBoundResult out;
  out.witness.reserve(P.size());
  for (const Disc& d : P) {
    std::size_t nearest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < Q.size(); ++j) {
      const double dist = distance(d.centre, Q[j]);
      if (dist < best) {
        best = dist;
        nearest = j;
      }
    }
    out.value = std::max(out.value, std::max(0.0, best - d.radius));
    out.witness.push_back(closest_point_in_disc(Q[nearest], d));
  }
  return out;
}

}  // namespace ihd
