#pragma once

// JSON documents for instances and results.
//
// Instance: {"name": ..., "epsilon": ..., "p": side, "q": side} where a side
// is {"kind": "precise", "points": [[x, y], ...]} or
// {"kind": "imprecise", "discs": [[cx, cy, r], ...]}.

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ihd/geometry.hpp"

namespace ihd {

using Side = std::variant<PointSet, ImprecisePointSet>;

inline bool is_imprecise(const Side& s) { return std::holds_alternative<ImprecisePointSet>(s); }

/// Radius-zero discs for a precise side.
inline ImprecisePointSet as_discs(const Side& s) {
  return is_imprecise(s) ? std::get<ImprecisePointSet>(s) : lift(std::get<PointSet>(s));
}

inline std::size_t side_size(const Side& s) {
  return std::visit([](const auto& v) { return v.size(); }, s);
}

struct InstanceDocument {
  std::string name;
  std::optional<double> epsilon;
  std::optional<double> expected_hmin;
  Side p = PointSet{};
  Side q = ImprecisePointSet{};

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

struct Guarantee {
  std::string kind = "exact";  // exact | approx | threshold-exceeded
  double factor = 1.0;  // infinity when no multiplicative bound holds; JSON null
};

struct ResultDocument {
  std::string quantity;  // hmin | hmax
  double value = 0.0;
  Guarantee guarantee;
  std::optional<double> accepted_d;
  PointSet witness_p, witness_q;
  std::string algorithm;
  double wall_time = 0.0;
};

namespace detail {

inline double finite_number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InvalidInput(std::string(what) + ": non-finite number");
  return v;
}

inline std::vector<double> tuple(const nlohmann::json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    throw InvalidInput(std::string(what) + ": expected an array of " + std::to_string(n) + " numbers");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(finite_number(x, what));
  return out;
}

inline PointSet points_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + ": expected an array of points");
  PointSet out;
  for (const auto& e : j) {
    const auto v = tuple(e, 2, what);
    out.push_back({v[0], v[1]});
  }
  return out;
}

inline nlohmann::json points_to_json(std::span<const Point> pts) {
  auto out = nlohmann::json::array();
  for (Point x : pts) out.push_back({x.x, x.y});
  return out;
}

inline Side side_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InvalidInput(std::string(what) + ": missing kind");
  const std::string kind = j["kind"];
  if (kind == "precise") {
    if (!j.contains("points")) throw InvalidInput(std::string(what) + ": missing points");
    return points_from_json(j["points"], what);
  }
  if (kind == "imprecise") {
    if (!j.contains("discs") || !j["discs"].is_array()) throw InvalidInput(std::string(what) + ": missing discs");
    ImprecisePointSet out;
    for (const auto& e : j["discs"]) {
      const auto v = tuple(e, 3, what);
      if (v[2] < 0.0) throw InvalidInput(std::string(what) + ": negative radius");
      out.push_back({{v[0], v[1]}, v[2]});
    }
    return out;
  }
  throw InvalidInput(std::string(what) + ": unknown kind '" + kind + "'");
}

inline nlohmann::json side_to_json(const Side& s) {
  if (const auto* pts = std::get_if<PointSet>(&s)) return {{"kind", "precise"}, {"points", points_to_json(*pts)}};
  auto discs = nlohmann::json::array();
  for (const Disc& d : std::get<ImprecisePointSet>(s)) discs.push_back({d.centre.x, d.centre.y, d.radius});
  return {{"kind", "imprecise"}, {"discs", discs}};
}

}  // namespace detail

inline nlohmann::json to_json(const InstanceDocument& doc) {
  nlohmann::json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  if (doc.epsilon) j["epsilon"] = *doc.epsilon;
  if (doc.expected_hmin) j["expected_hmin"] = *doc.expected_hmin;
  j["p"] = detail::side_to_json(doc.p);
  j["q"] = detail::side_to_json(doc.q);
  return j;
}

inline InstanceDocument instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("instance: expected a JSON object");
  InstanceDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InvalidInput("instance: name must be a string");
    doc.name = j["name"];
  }
  if (j.contains("epsilon")) doc.epsilon = detail::finite_number(j["epsilon"], "instance epsilon");
  if (j.contains("expected_hmin")) doc.expected_hmin = detail::finite_number(j["expected_hmin"], "instance expected_hmin");
  if (!j.contains("p") || !j.contains("q")) throw InvalidInput("instance: needs both p and q");
  doc.p = detail::side_from_json(j["p"], "p");
  doc.q = detail::side_from_json(j["q"], "q");
  return doc;
}

inline InstanceDocument parse_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("instance: ") + e.what());
  }
  return instance_from_json(j);
}

inline std::string emit_instance(const InstanceDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline nlohmann::json to_json(const ResultDocument& r) {
  nlohmann::json j;
  j["quantity"] = r.quantity;
  j["value"] = r.value;
  j["guarantee"] = {{"kind", r.guarantee.kind}, {"factor", nullptr}};
  if (std::isfinite(r.guarantee.factor)) j["guarantee"]["factor"] = r.guarantee.factor;
  if (r.accepted_d) j["accepted_d"] = *r.accepted_d;
  if (!r.witness_p.empty() || !r.witness_q.empty())
    j["witness"] = {{"p", detail::points_to_json(r.witness_p)}, {"q", detail::points_to_json(r.witness_q)}};
  j["algorithm"] = r.algorithm;
  j["wall_time"] = r.wall_time;
  return j;
}

inline ResultDocument result_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("result: expected a JSON object");
  ResultDocument r;
  try {
    r.quantity = j.at("quantity").get<std::string>();
    r.value = detail::finite_number(j.at("value"), "result value");
    r.guarantee.kind = j.at("guarantee").at("kind").get<std::string>();
    const auto& factor = j.at("guarantee").at("factor");
    r.guarantee.factor =
        factor.is_null() ? std::numeric_limits<double>::infinity() : detail::finite_number(factor, "result factor");
    if (j.contains("accepted_d")) r.accepted_d = detail::finite_number(j["accepted_d"], "result accepted_d");
    if (j.contains("witness")) {
      r.witness_p = detail::points_from_json(j["witness"].at("p"), "witness p");
      r.witness_q = detail::points_from_json(j["witness"].at("q"), "witness q");
    }
    if (j.contains("algorithm")) r.algorithm = j["algorithm"].get<std::string>();
    if (j.contains("wall_time")) r.wall_time = detail::finite_number(j["wall_time"], "result wall_time");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("result: ") + e.what());
  }
  return r;
}

inline ResultDocument parse_result(const std::string& text) {
  try {
    return result_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("result: ") + e.what());
  }
}

}  // namespace ihd
