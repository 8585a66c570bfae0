#pragma once

// Planar 3-SAT reduction instances: variable cycles, literal chains and clause
// triangles of points and discs with radius r = 2.5 eps. Every point sits at
// boundary gap exactly eps from the discs next to it, so a satisfying
// assignment yields a realisation with directed distance eps.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ihd/geometry.hpp"

namespace ihd {

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Literal {
  std::size_t variable = 0;
  bool negated = false;
};

struct Formula {
  std::size_t variables = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

inline bool satisfies(const Formula& f, const std::vector<bool>& assignment) {
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& clause) {
    return std::any_of(clause.begin(), clause.end(),
                       [&](const Literal& l) { return assignment.at(l.variable) != l.negated; });
  });
}

struct ClausePlacement {
  Point anchor;
  double orientation = 0.0;  // angle of slot 0, radians
  bool above = true;
};

/// Route of the chain carrying literal `literal` of clause `clause` into
/// slot `slot` of that clause.
struct ChainRoute {
  std::size_t clause = 0;
  std::size_t literal = 0;
  std::size_t slot = 0;
  std::size_t cycle_disc = 0;  // position of the tapped disc within its cycle
  int side = -1;               // +1: left of the cycle direction, -1: right
  std::vector<Point> waypoints;
  int bow = 1;  // side to which legs bulge when they are longer than the gap
};

/// Cycle layouts are closed polylines through element positions, starting
/// with a point; legs between waypoints are filled at the element pitch.
struct Embedding {
  std::vector<std::vector<Point>> cycles;  // one per variable
  std::vector<ClausePlacement> clauses;
  std::vector<ChainRoute> routes;
};

struct CycleElements {
  PointSet points;               // points[i] precedes discs[i]
  ImprecisePointSet discs;       // discs[i] precedes points[i + 1]
  PointSet q0, q1;               // realisations nearest the preceding / following point
};

struct ChainElements {
  PointSet points;          // points[0] is the tap point
  ImprecisePointSet discs;  // discs[j] follows points[j]; the last one is the clause slot
  Point tapped;             // host realisation the tap point is eps from
  Point other;              // the host's other realisation
};

struct ClauseElements {
  Point centre;
  std::array<Point, 3> slots;
};

enum class Role { Cycle, Chain, Clause };

struct ElementTag {
  Role role = Role::Cycle;
  std::size_t owner = 0;     // cycle, chain or clause id
  std::size_t position = 0;  // index in the owner's element sequence
  std::optional<bool> tap_q1;
};

struct ElementRef {
  bool disc = false;
  std::size_t index = 0;
};

struct CycleRecord {
  std::vector<ElementRef> sequence;  // closed: point, disc, point, ...
  std::vector<std::size_t> discs;    // global disc indices in order
  PointSet q0, q1;
};

struct ChainRecord {
  std::size_t clause = 0, literal = 0, slot = 0;
  std::size_t variable = 0;
  bool negated = false;
  std::size_t host_cycle = 0;
  std::size_t host_position = 0;  // sequence position of the host disc
  std::vector<ElementRef> sequence;  // open: tap point, disc, ..., slot disc
  Point tapped, other;
};

struct ClauseRecord {
  std::size_t point = 0;
  std::array<std::size_t, 3> slots{};  // global disc indices
};

struct GadgetInstance {
  PointSet P;
  ImprecisePointSet Q;
  double epsilon = 1.0;
  double r = 2.5;
  Formula formula;
  std::vector<ElementTag> point_tags, disc_tags;
  std::vector<CycleRecord> cycles;
  std::vector<ChainRecord> chains;
  std::vector<ClauseRecord> clauses;
};

namespace detail {

inline constexpr double kGadgetTol = 1e-9;

inline double pitch(double eps) { return 3.5 * eps; }

/// Largest half-turn per element that keeps elements two apart at least
/// 6 eps from each other: cos(phi) >= 6/7.
inline double max_half_turn() { return std::acos(6.0 / 7.0); }

inline std::size_t leg_chords(double length, double s) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(length / s - 1e-9)));
}

/// Element positions after `a` up to and including `b`, `chords` steps of
/// length s. Legs longer than the gap are laid on a circular arc.
inline PointSet fit_leg(Point a, Point b, std::size_t chords, double s, int bow) {
  const double length = distance(a, b);
  const double ratio = length / s;
  const auto n = static_cast<double>(chords);
  if (ratio > n + 1e-9) throw ConstructionError("gadget leg longer than its element count allows");
  const double heading = std::atan2(b.y - a.y, b.x - a.x);
  double phi = 0.0;
  if (ratio < n - 1e-12) {
    // sin(n phi) / sin(phi) falls from n to 0 on (0, pi / n).
    double lo = 0.0, hi = std::numbers::pi / n;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (std::sin(n * mid) / std::sin(mid) > ratio ? lo : hi) = mid;
    }
    phi = 0.5 * (lo + hi);
  }
  if (phi > max_half_turn() + 1e-12) throw ConstructionError("gadget leg bends too sharply");
  PointSet out;
  Point x = a;
  const double sign = bow >= 0 ? 1.0 : -1.0;
  for (std::size_t k = 0; k < chords; ++k) {
    const double t = heading - sign * (n - 1.0) * phi + sign * 2.0 * phi * static_cast<double>(k);
    x = x + s * unit_from_angle(t);
    out.push_back(x);
  }
  out.back() = b;
  return out;
}

inline Point toward(const Disc& d, Point x) {
  return d.centre + d.radius * ((1.0 / distance(x, d.centre)) * (x - d.centre));
}

}  // namespace detail

/// Alternating points and discs around a closed layout.
inline CycleElements build_cycle(std::span<const Point> layout, double eps) {
  if (layout.size() < 3) throw ConstructionError("cycle layout needs at least three waypoints");
  const double s = detail::pitch(eps);
  PointSet positions{layout[0]};
  std::size_t total = 0;
  std::vector<std::size_t> chords(layout.size());
  for (std::size_t k = 0; k < layout.size(); ++k) {
    chords[k] = detail::leg_chords(distance(layout[k], layout[(k + 1) % layout.size()]), s);
    total += chords[k];
  }
  if (total % 2 == 1) ++chords.back();
  for (std::size_t k = 0; k < layout.size(); ++k) {
    PointSet leg = detail::fit_leg(layout[k], layout[(k + 1) % layout.size()], chords[k], s, 1);
    positions.insert(positions.end(), leg.begin(), leg.end());
  }
  positions.pop_back();  // the closing leg returns to layout[0]
  if (positions.size() < 6) throw ConstructionError("cycle layout too small");

  CycleElements out;
  const double r = 2.5 * eps;
  for (std::size_t i = 0; i < positions.size(); i += 2) {
    out.points.push_back(positions[i]);
    out.discs.push_back({positions[i + 1], r});
  }
  const std::size_t n = out.discs.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.q0.push_back(detail::toward(out.discs[i], out.points[i]));
    out.q1.push_back(detail::toward(out.discs[i], out.points[(i + 1) % n]));
  }
  return out;
}

/// A chain from a tap on disc `host_disc` of `host` to the clause slot
/// centre `slot`. The tap point is eps from the host's q1 realisation when
/// `tap_q1`, otherwise from its q0 realisation, offset along the tangent on
/// `side` of the cycle direction.
inline ChainElements build_chain(const CycleElements& host, std::size_t host_disc, bool tap_q1, int side,
                                 std::span<const Point> waypoints, Point slot, double eps, int bow = 1) {
  if (host_disc >= host.discs.size()) throw ConstructionError("chain taps a disc outside its cycle");
  const double s = detail::pitch(eps);
  const std::size_t n = host.discs.size();
  const Disc& d = host.discs[host_disc];
  const Point before = host.points[host_disc], after = host.points[(host_disc + 1) % n];

  ChainElements out;
  out.tapped = tap_q1 ? host.q1[host_disc] : host.q0[host_disc];
  out.other = tap_q1 ? host.q0[host_disc] : host.q1[host_disc];
  const Point radial = (1.0 / d.radius) * (out.tapped - d.centre);
  const Point left = perpendicular(after - before);
  Point normal = perpendicular(radial);
  if (dot(normal, left) * static_cast<double>(side) < 0.0) normal = -1.0 * normal;

  PointSet positions{out.tapped + eps * normal, out.tapped + (eps + s) * normal};
  std::vector<Point> stops(waypoints.begin(), waypoints.end());
  stops.push_back(slot);
  for (std::size_t k = 0; k < stops.size(); ++k) {
    std::size_t chords = detail::leg_chords(distance(positions.back(), stops[k]), s);
    // The slot must land on an odd position, i.e. be a disc.
    if (k + 1 == stops.size() && (positions.size() - 1 + chords) % 2 == 0) ++chords;
    PointSet leg = detail::fit_leg(positions.back(), stops[k], chords, s, bow);
    positions.insert(positions.end(), leg.begin(), leg.end());
  }
  const double r = 2.5 * eps;
  for (std::size_t i = 0; i < positions.size(); i += 2) {
    out.points.push_back(positions[i]);
    out.discs.push_back({positions[i + 1], r});
  }
  return out;
}

/// Clause point at the anchor with slot centres eps + r away at 120 degree
/// steps from `orientation`.
inline ClauseElements build_clause(Point anchor, double orientation, double eps) {
  ClauseElements out{anchor, {}};
  for (std::size_t k = 0; k < 3; ++k)
    out.slots[k] = anchor + detail::pitch(eps) *
                                unit_from_angle(orientation + 2.0 * std::numbers::pi * static_cast<double>(k) / 3.0);
  return out;
}

inline std::string describe(const GadgetInstance& inst, ElementRef e) {
  const ElementTag& t = e.disc ? inst.disc_tags[e.index] : inst.point_tags[e.index];
  static constexpr const char* roles[] = {"cycle", "chain", "clause"};
  return std::string(roles[static_cast<int>(t.role)]) + " " + std::to_string(t.owner) + " " +
         (e.disc ? "disc" : "point") + " " + std::to_string(t.position);
}

/// Every violated instance invariant, described by the offending pair.
inline std::vector<std::string> invariant_violations(const GadgetInstance& inst) {
  using detail::kGadgetTol;
  const double eps = inst.epsilon;
  std::vector<std::string> out;
  auto at = [&](ElementRef e) { return e.disc ? inst.Q[e.index].centre : inst.P[e.index]; };
  auto pair_name = [&](ElementRef a, ElementRef b) { return describe(inst, a) + " / " + describe(inst, b); };

  if (std::abs(inst.r - 2.5 * eps) > kGadgetTol) out.push_back("disc radius is not 2.5 eps");
  for (std::size_t i = 0; i < inst.Q.size(); ++i)
    if (std::abs(inst.Q[i].radius - inst.r) > kGadgetTol)
      out.push_back(describe(inst, {true, i}) + ": radius differs from r");

  for (std::size_t i = 0; i < inst.Q.size(); ++i)
    for (std::size_t j = i + 1; j < inst.Q.size(); ++j)
      if (distance(inst.Q[i].centre, inst.Q[j].centre) <= inst.Q[i].radius + inst.Q[j].radius + kGadgetTol)
        out.push_back(pair_name({true, i}, {true, j}) + ": discs intersect");

  // Linked pairs: sequence neighbours, clause point with its slots, and the
  // tap neighbourhood (first two chain elements against host elements at
  // most two positions from the tapped disc).
  std::vector<std::vector<char>> linked(inst.P.size() + inst.Q.size(),
                                        std::vector<char>(inst.P.size() + inst.Q.size(), 0));
  auto id = [&](ElementRef e) { return e.disc ? inst.P.size() + e.index : e.index; };
  auto link = [&](ElementRef a, ElementRef b) { linked[id(a)][id(b)] = linked[id(b)][id(a)] = 1; };
  std::vector<std::pair<ElementRef, ElementRef>> gap_pairs;
  auto neighbours = [&](ElementRef a, ElementRef b) {
    link(a, b);
    gap_pairs.push_back(a.disc ? std::pair{b, a} : std::pair{a, b});
  };
  for (const CycleRecord& c : inst.cycles)
    for (std::size_t k = 0; k < c.sequence.size(); ++k) neighbours(c.sequence[k], c.sequence[(k + 1) % c.sequence.size()]);
  for (const ChainRecord& c : inst.chains) {
    for (std::size_t k = 0; k + 1 < c.sequence.size(); ++k) neighbours(c.sequence[k], c.sequence[k + 1]);
    const auto& host = inst.cycles[c.host_cycle].sequence;
    const std::size_t n = host.size();
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t off = 0; off <= 4; ++off) link(c.sequence[k], host[(c.host_position + n + off - 2) % n]);

    const Point tap = inst.P[c.sequence[0].index];
    if (std::abs(distance(tap, c.tapped) - eps) > kGadgetTol)
      out.push_back(describe(inst, c.sequence[0]) + ": tap point is not eps from its tapped realisation");
    if (distance(tap, c.other) <= eps + kGadgetTol)
      out.push_back(describe(inst, c.sequence[0]) + ": tap point is within eps of the other realisation");
  }
  for (const ClauseRecord& c : inst.clauses)
    for (std::size_t s : c.slots) neighbours({false, c.point}, {true, s});

  for (const auto& [p, q] : gap_pairs) {
    const double gap = distance(inst.P[p.index], inst.Q[q.index].centre) - inst.Q[q.index].radius;
    if (std::abs(gap - eps) > kGadgetTol) out.push_back(pair_name(p, q) + ": gap is not eps");
  }

  std::vector<ElementRef> all;
  for (std::size_t i = 0; i < inst.P.size(); ++i) all.push_back({false, i});
  for (std::size_t i = 0; i < inst.Q.size(); ++i) all.push_back({true, i});
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (linked[id(all[a])][id(all[b])]) continue;
      if (distance(at(all[a]), at(all[b])) < 6.0 * eps - kGadgetTol)
        out.push_back(pair_name(all[a], all[b]) + ": closer than 6 eps");
    }

  // No point may come closer than eps to a disc, except a tap point to its host.
  for (std::size_t p = 0; p < inst.P.size(); ++p)
    for (std::size_t q = 0; q < inst.Q.size(); ++q) {
      const bool tap_host = std::any_of(inst.chains.begin(), inst.chains.end(), [&](const ChainRecord& c) {
        return c.sequence[0].index == p && inst.cycles[c.host_cycle].sequence[c.host_position].index == q;
      });
      if (tap_host) continue;
      if (distance(inst.P[p], inst.Q[q].centre) - inst.Q[q].radius < eps - kGadgetTol)
        out.push_back(pair_name({false, p}, {true, q}) + ": gap below eps");
    }
  return out;
}

inline bool check_invariants(const GadgetInstance& inst) { return invariant_violations(inst).empty(); }

/// Union of the cycles, chains and clauses of an embedded formula.
inline GadgetInstance assemble(const Formula& f, const Embedding& e, double eps) {
  if (!(eps > 0.0)) throw ConstructionError("epsilon must be positive");
  if (e.cycles.size() != f.variables) throw ConstructionError("embedding needs one cycle per variable");
  if (e.clauses.size() != f.clauses.size()) throw ConstructionError("embedding needs one placement per clause");

  GadgetInstance inst;
  inst.epsilon = eps;
  inst.r = 2.5 * eps;
  inst.formula = f;

  auto add_point = [&](Point x, ElementTag tag) {
    inst.P.push_back(x);
    inst.point_tags.push_back(tag);
    return ElementRef{false, inst.P.size() - 1};
  };
  auto add_disc = [&](const Disc& d, ElementTag tag) {
    inst.Q.push_back(d);
    inst.disc_tags.push_back(tag);
    return ElementRef{true, inst.Q.size() - 1};
  };

  std::vector<CycleElements> built;
  for (std::size_t v = 0; v < f.variables; ++v) {
    built.push_back(build_cycle(e.cycles[v], eps));
    const CycleElements& c = built.back();
    CycleRecord rec{{}, {}, c.q0, c.q1};
    for (std::size_t i = 0; i < c.discs.size(); ++i) {
      rec.sequence.push_back(add_point(c.points[i], {Role::Cycle, v, 2 * i, std::nullopt}));
      rec.sequence.push_back(add_disc(c.discs[i], {Role::Cycle, v, 2 * i + 1, std::nullopt}));
      rec.discs.push_back(rec.sequence.back().index);
    }
    inst.cycles.push_back(std::move(rec));
  }

  std::vector<ClauseElements> gadgets;
  for (std::size_t k = 0; k < f.clauses.size(); ++k) {
    gadgets.push_back(build_clause(e.clauses[k].anchor, e.clauses[k].orientation, eps));
    ClauseRecord rec;
    rec.point = add_point(gadgets.back().centre, {Role::Clause, k, 0, std::nullopt}).index;
    inst.clauses.push_back(rec);
  }

  std::vector<std::array<bool, 3>> filled(f.clauses.size(), {false, false, false});
  for (const ChainRoute& route : e.routes) {
    if (route.clause >= f.clauses.size() || route.literal > 2 || route.slot > 2)
      throw ConstructionError("chain route refers to a missing clause literal");
    if (filled[route.clause][route.slot]) throw ConstructionError("two chains end in the same clause slot");
    filled[route.clause][route.slot] = true;
    const Literal lit = f.clauses[route.clause][route.literal];
    if (lit.variable >= f.variables) throw ConstructionError("literal refers to a missing variable");
    const bool tap_q1 = !lit.negated;
    const ChainElements chain = build_chain(built[lit.variable], route.cycle_disc, tap_q1, route.side, route.waypoints,
                                            gadgets[route.clause].slots[route.slot], eps, route.bow);

    const std::size_t id = inst.chains.size();
    ChainRecord rec;
    rec.clause = route.clause;
    rec.literal = route.literal;
    rec.slot = route.slot;
    rec.variable = lit.variable;
    rec.negated = lit.negated;
    rec.host_cycle = lit.variable;
    rec.host_position = 2 * route.cycle_disc + 1;
    rec.tapped = chain.tapped;
    rec.other = chain.other;
    for (std::size_t j = 0; j < chain.points.size(); ++j) {
      std::optional<bool> tap;
      if (j == 0) tap = tap_q1;
      rec.sequence.push_back(add_point(chain.points[j], {Role::Chain, id, 2 * j, tap}));
      rec.sequence.push_back(add_disc(chain.discs[j], {Role::Chain, id, 2 * j + 1, std::nullopt}));
    }
    inst.clauses[route.clause].slots[route.slot] = rec.sequence.back().index;
    inst.chains.push_back(std::move(rec));
  }
  for (const auto& slots : filled)
    if (!std::all_of(slots.begin(), slots.end(), [](bool b) { return b; }))
      throw ConstructionError("every clause slot needs a chain");

  if (auto bad = invariant_violations(inst); !bad.empty()) throw ConstructionError(bad.front());
  return inst;
}

/// Realisation for an assignment: each cycle in q1 when its variable is true,
/// each chain serving forward towards its clause when its literal is true.
inline PointSet witness_from_assignment(const GadgetInstance& inst, const std::vector<bool>& assignment) {
  if (assignment.size() < inst.formula.variables) throw InvalidInput("assignment does not cover every variable");
  PointSet Q = centres(inst.Q);
  for (std::size_t v = 0; v < inst.cycles.size(); ++v) {
    const CycleRecord& c = inst.cycles[v];
    for (std::size_t i = 0; i < c.discs.size(); ++i) Q[c.discs[i]] = assignment[v] ? c.q1[i] : c.q0[i];
  }
  for (const ChainRecord& c : inst.chains) {
    const bool forward = assignment[c.variable] != c.negated;
    const Point clause_point = inst.P[inst.clauses[c.clause].point];
    for (std::size_t k = 1; k < c.sequence.size(); k += 2) {
      const Disc& d = inst.Q[c.sequence[k].index];
      Point target;
      if (!forward)
        target = inst.P[c.sequence[k - 1].index];
      else if (k + 1 < c.sequence.size())
        target = inst.P[c.sequence[k + 1].index];
      else
        target = clause_point;
      Q[c.sequence[k].index] = detail::toward(d, target);
    }
  }
  return Q;
}

/// Distance from x to the half of disc d on the side (y - centre) . axis >= 0.
inline double half_disc_distance(Point x, const Disc& d, Point axis) {
  const Point u = (1.0 / norm(axis)) * axis;
  const Point rel = x - d.centre;
  const bool far_side = dot(rel, u) >= 0.0;
  if (far_side && norm(rel) <= d.radius) return 0.0;
  // Chord through the centre perpendicular to u.
  const Point t = perpendicular(u);
  const double along = std::clamp(dot(rel, t), -d.radius, d.radius);
  double best = distance(x, d.centre + along * t);
  // Arc: the radial projection when it falls on the far side.
  if (far_side && norm(rel) > 0.0) best = std::min(best, norm(rel) - d.radius);
  return best;
}

struct ClauseGap {
  bool pass = false;
  std::array<double, 3> minima{};
};

/// With every chain of the clause slack, each slot's realisation stays in
/// the half-disc facing away from the clause point; passes when all three
/// half-discs keep at least 3 eps from it.
inline ClauseGap clause_gap_check(const GadgetInstance& inst, std::size_t clause) {
  if (clause >= inst.clauses.size()) throw InvalidInput("clause_gap_check: no such clause");
  const Point star = inst.P[inst.clauses[clause].point];
  ClauseGap out{true, {}};
  for (std::size_t k = 0; k < 3; ++k) {
    const Disc& d = inst.Q[inst.clauses[clause].slots[k]];
    out.minima[k] = half_disc_distance(star, d, d.centre - star);
    if (out.minima[k] < 3.0 * inst.epsilon - detail::kGadgetTol) out.pass = false;
  }
  return out;
}

struct GadgetTemplate {
  std::string name;
  Formula formula;
  Embedding embedding;
};

namespace detail {

/// Waypoints of a walk of whole pitches: each step turns by `turn` radians
/// and then advances `chords` pitches.
inline std::vector<Point> walk(Point start, double heading, std::span<const std::pair<double, int>> steps,
                               double eps) {
  std::vector<Point> out;
  Point x = start;
  for (const auto& [turn, chords] : steps) {
    heading += turn;
    x = x + (pitch(eps) * chords) * unit_from_angle(heading);
    out.push_back(x);
  }
  return out;
}

/// Counter-clockwise octagon: bottom and top runs of `width` pitches, sides of
/// `height` pitches, one-pitch diagonal corners.
inline std::vector<Point> octagon(Point bottom_left, int width, int height, double eps) {
  const double q = std::numbers::pi / 4.0;
  const std::pair<double, int> steps[] = {{0.0, width}, {q, 1}, {q, height}, {q, 1},
                                          {q, width},   {q, 1}, {q, height}, {q, 1}};
  std::vector<Point> out{bottom_left};
  for (Point x : walk(bottom_left, 0.0, steps, eps)) out.push_back(x);
  out.pop_back();
  return out;
}

/// Approach into clause slot `slot` of `placement`, walked backwards from the
/// slot: `radial` pitches straight out, then turns until heading `exit`.
inline std::vector<Point> slot_approach(const ClausePlacement& placement, std::size_t slot, int radial,
                                        std::span<const double> turns, double eps) {
  const double out_angle = placement.orientation + 2.0 * std::numbers::pi * static_cast<double>(slot) / 3.0;
  const Point start = build_clause(placement.anchor, placement.orientation, eps).slots[slot];
  std::vector<std::pair<double, int>> steps;
  if (radial > 0) steps.push_back({0.0, radial});
  for (double t : turns) steps.push_back({t, 1});
  std::vector<Point> back = walk(start, out_angle, steps, eps);
  std::reverse(back.begin(), back.end());
  return back;
}

}  // namespace detail

namespace detail {

/// The disc on the top (or bottom) run of a cycle whose tapped realisation is
/// horizontally closest to x.
inline std::size_t run_disc(const CycleElements& c, bool top, bool tap_q1, double x) {
  double level = c.discs[0].centre.y;
  for (const Disc& d : c.discs) level = top ? std::max(level, d.centre.y) : std::min(level, d.centre.y);
  std::size_t best = c.discs.size();
  for (std::size_t i = 0; i < c.discs.size(); ++i) {
    if (std::abs(c.discs[i].centre.y - level) > 1e-9) continue;
    const double tx = (tap_q1 ? c.q1[i] : c.q0[i]).x;
    if (best == c.discs.size() || std::abs(tx - x) < std::abs((tap_q1 ? c.q1[best] : c.q0[best]).x - x)) best = i;
  }
  return best;
}

inline double run_level(const CycleElements& c, bool top) {
  double level = c.discs[0].centre.y;
  for (const Disc& d : c.discs) level = top ? std::max(level, d.centre.y) : std::min(level, d.centre.y);
  return level;
}

inline constexpr double kDegree = std::numbers::pi / 180.0;

/// Routes for one clause, literal_of_slot[s] feeding slot s: slot 0 straight
/// in, slots 1 and 2 wrapping around from the sides.
inline void route_clause(GadgetTemplate& t, std::size_t clause, const std::array<std::size_t, 3>& literal_of_slot,
                         const std::vector<CycleElements>& cycles, double eps) {
  const ClausePlacement& placement = t.embedding.clauses[clause];
  const bool above = placement.above;
  // Walked back from the slot, slot 1 turns clockwise onto the vertical and
  // slot 2 anticlockwise.
  const double turns1[] = {-40.0 * kDegree, -40.0 * kDegree, -40.0 * kDegree};
  const double turns2[] = {40.0 * kDegree, 40.0 * kDegree, 40.0 * kDegree};
  for (std::size_t slot = 0; slot < 3; ++slot) {
    const std::size_t literal = literal_of_slot[slot];
    const Literal lit = t.formula.clauses[clause][literal];
    const CycleElements& host = cycles[lit.variable];
    ChainRoute route{clause, literal, slot, 0, -1, {}, 1};
    if (slot == 1) route.waypoints = slot_approach(placement, 1, 2, turns1, eps);
    if (slot == 2) route.waypoints = slot_approach(placement, 2, 2, turns2, eps);
    const double x = slot == 0 ? placement.anchor.x : route.waypoints.front().x;
    route.cycle_disc = run_disc(host, above, !lit.negated, x);
    route.bow = slot == 2 ? -1 : 1;
    t.embedding.routes.push_back(std::move(route));
  }
}

}  // namespace detail

/// (x or x or x) on one cycle with the clause above it.
inline GadgetTemplate single_variable_template(double eps = 1.0) {
  GadgetTemplate t;
  t.name = "x|x|x";
  t.formula.variables = 1;
  t.formula.clauses.push_back({Literal{0, false}, Literal{0, false}, Literal{0, false}});
  t.embedding.cycles.push_back(detail::octagon({0.0, 0.0}, 12, 2, eps));
  const std::vector<CycleElements> cycles{build_cycle(t.embedding.cycles[0], eps)};

  const std::size_t middle = detail::run_disc(cycles[0], true, true, 21.0 * eps);
  const Point anchor{cycles[0].q1[middle].x, detail::run_level(cycles[0], true) + 30.0 * eps};
  t.embedding.clauses.push_back({anchor, -90.0 * detail::kDegree, true});
  detail::route_clause(t, 0, {0, 1, 2}, cycles, eps);
  return t;
}

/// (x or y or y) and (not x or not y or not y): two cycles side by side, the
/// first clause above them and the second below.
inline GadgetTemplate two_variable_template(double eps = 1.0) {
  GadgetTemplate t;
  t.name = "(x|y|y)&(!x|!y|!y)";
  t.formula.variables = 2;
  t.formula.clauses.push_back({Literal{0, false}, Literal{1, false}, Literal{1, false}});
  t.formula.clauses.push_back({Literal{0, true}, Literal{1, true}, Literal{1, true}});
  t.embedding.cycles.push_back(detail::octagon({0.0, 0.0}, 4, 2, eps));
  t.embedding.cycles.push_back(detail::octagon({40.0 * eps, 0.0}, 8, 2, eps));
  std::vector<CycleElements> cycles;
  for (const auto& layout : t.embedding.cycles) cycles.push_back(build_cycle(layout, eps));

  const std::size_t up = detail::run_disc(cycles[1], true, true, 50.0 * eps);
  const std::size_t down = detail::run_disc(cycles[1], false, false, 50.0 * eps);
  const double top = detail::run_level(cycles[1], true), bottom = detail::run_level(cycles[1], false);
  t.embedding.clauses.push_back({{cycles[1].q1[up].x, top + 30.0 * eps}, -90.0 * detail::kDegree, true});
  t.embedding.clauses.push_back({{cycles[1].q0[down].x, bottom - 30.0 * eps}, 90.0 * detail::kDegree, false});
  // Slot 0 takes a y literal; x feeds whichever side slot faces its cycle.
  detail::route_clause(t, 0, {1, 2, 0}, cycles, eps);
  detail::route_clause(t, 1, {1, 0, 2}, cycles, eps);
  return t;
}

inline std::vector<GadgetTemplate> bundled_templates(double eps = 1.0) {
  return {single_variable_template(eps), two_variable_template(eps)};
}

}  // namespace ihd
