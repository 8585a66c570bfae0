#pragma once

// SVG 1.1 drawing of an instance and, optionally, a result's witness.

#include <algorithm>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>

#include "ihd/instance_io.hpp"

namespace ihd {

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Frame {
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -std::numeric_limits<double>::infinity(), max_y = max_x;

  void add(Point c, double r = 0.0) {
    min_x = std::min(min_x, c.x - r);
    min_y = std::min(min_y, c.y - r);
    max_x = std::max(max_x, c.x + r);
    max_y = std::max(max_y, c.y + r);
  }
};

}  // namespace detail

/// Discs outlined, points as dots, witness realisations as squares, the
/// critical pair as one arrow and dashed circles of radius `value` around the
/// witness q's when `value_circles` is set.
inline std::string render_svg(const InstanceDocument& doc, const std::optional<ResultDocument>& result = {},
                              bool value_circles = true) {
  using detail::num;
  const ImprecisePointSet P = as_discs(doc.p), Q = as_discs(doc.q);
  detail::Frame f;
  for (const Disc& d : P) f.add(d.centre, d.radius);
  for (const Disc& d : Q) f.add(d.centre, d.radius);
  if (result) {
    for (Point x : result->witness_p) f.add(x);
    for (Point x : result->witness_q) f.add(x, value_circles ? result->value : 0.0);
  }
  if (!(f.min_x <= f.max_x)) f.add({0.0, 0.0});
  const double extent = std::max({f.max_x - f.min_x, f.max_y - f.min_y, 1e-6});
  const double margin = 0.05 * extent;
  const double mark = 0.008 * extent;
  const double stroke = 0.003 * extent;

  // Flip y so that the picture has the usual mathematical orientation.
  auto X = [](Point p) { return num(p.x); };
  auto Y = [](Point p) { return num(-p.y); };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(f.min_x - margin) + " " +
       num(-f.max_y - margin) + " " + num(f.max_x - f.min_x + 2 * margin) + " " +
       num(f.max_y - f.min_y + 2 * margin) + "\">\n";
  if (!doc.name.empty()) {
    std::string title;
    for (char c : doc.name) {
      if (c == '<') title += "&lt;";
      else if (c == '>') title += "&gt;";
      else if (c == '&') title += "&amp;";
      else title += c;
    }
    s += "  <title>" + title + "</title>\n";
  }
  s += "  <defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
       "markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#c0392b\"/></marker></defs>\n";

  auto draw_side = [&](const ImprecisePointSet& discs, const char* cls, const char* colour) {
    for (const Disc& d : discs) {
      if (d.radius > 0.0)
        s += "  <circle class=\"" + std::string(cls) + "-disc\" cx=\"" + X(d.centre) + "\" cy=\"" + Y(d.centre) +
             "\" r=\"" + num(d.radius) + "\" fill=\"" + colour + "\" fill-opacity=\"0.15\" stroke=\"" + colour +
             "\" stroke-width=\"" + num(stroke) + "\"/>\n";
      else
        s += "  <circle class=\"" + std::string(cls) + "-point\" cx=\"" + X(d.centre) + "\" cy=\"" + Y(d.centre) +
             "\" r=\"" + num(mark) + "\" fill=\"" + colour + "\"/>\n";
    }
  };
  draw_side(Q, "q", "#2471a3");
  draw_side(P, "p", "#1e8449");

  if (result && !result->witness_p.empty() && !result->witness_q.empty()) {
    for (Point x : result->witness_q) {
      if (value_circles && result->value > 0.0)
        s += "  <circle class=\"value\" cx=\"" + X(x) + "\" cy=\"" + Y(x) + "\" r=\"" + num(result->value) +
             "\" fill=\"none\" stroke=\"#7f8c8d\" stroke-dasharray=\"" + num(4 * stroke) + "\" stroke-width=\"" +
             num(stroke) + "\"/>\n";
      s += "  <rect class=\"witness-q\" x=\"" + num(x.x - mark) + "\" y=\"" + num(-x.y - mark) + "\" width=\"" +
           num(2 * mark) + "\" height=\"" + num(2 * mark) + "\" fill=\"#2471a3\"/>\n";
    }
    for (Point x : result->witness_p)
      s += "  <rect class=\"witness-p\" x=\"" + num(x.x - mark) + "\" y=\"" + num(-x.y - mark) + "\" width=\"" +
           num(2 * mark) + "\" height=\"" + num(2 * mark) + "\" fill=\"#1e8449\"/>\n";

    // Critical pair: the witness p farthest from its nearest witness q.
    Point from = result->witness_p.front(), to = result->witness_q.front();
    double worst = -1.0;
    for (Point p : result->witness_p) {
      Point near = result->witness_q.front();
      for (Point q : result->witness_q)
        if (squared_distance(p, q) < squared_distance(p, near)) near = q;
      if (squared_distance(p, near) > worst) {
        worst = squared_distance(p, near);
        from = p;
        to = near;
      }
    }
    s += "  <line class=\"arrow\" x1=\"" + X(from) + "\" y1=\"" + Y(from) + "\" x2=\"" + X(to) + "\" y2=\"" + Y(to) +
         "\" stroke=\"#c0392b\" stroke-width=\"" + num(2 * stroke) + "\" marker-end=\"url(#head)\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace ihd
