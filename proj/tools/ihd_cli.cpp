// ihd: bounds on the directed Hausdorff distance between imprecise point sets.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ihd/ihd.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kMalformed = 2, kUnsupported = 3, kBudget = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ihd::InvalidInput("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Writes to `path` through a temporary file and a rename, or to stdout.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

struct ComputeArgs {
  std::string instance, output, quantity = "hmin", algorithm = "auto";
  double eps = 1e-9;
};

ihd::ResultDocument compute(const ComputeArgs& a) {
  using namespace ihd;
  const InstanceDocument doc = parse_instance(read_file(a.instance));
  Tolerance tol;
  tol.eps_predicate = a.eps;
  if (side_size(doc.p) == 0 || side_size(doc.q) == 0) throw InvalidInput("instance has an empty side");

  ResultDocument r;
  r.quantity = a.quantity;
  const auto start = std::chrono::steady_clock::now();
  auto unsupported = [&](const std::string& why) { return Unsupported(why); };

  if (a.quantity == "hmax") {
    if (a.algorithm != "auto" && a.algorithm != "upper-bound")
      throw unsupported("algorithm " + a.algorithm + " does not compute hmax");
    UpperBoundResult u = hmax(as_discs(doc.p), as_discs(doc.q), tol);
    r.value = u.value;
    r.witness_p = std::move(u.witness_P);
    r.witness_q = std::move(u.witness_Q);
    r.algorithm = "upper-bound";
  } else if (a.quantity == "hmin") {
    const bool p_imp = is_imprecise(doc.p), q_imp = is_imprecise(doc.q);
    if (p_imp && q_imp) throw unsupported("hmin with both sides imprecise is not supported");
    if (!q_imp && !p_imp) {
      if (a.algorithm != "auto") throw unsupported("both sides precise: only the direct distance applies");
      const auto& P = std::get<PointSet>(doc.p);
      const auto& Q = std::get<PointSet>(doc.q);
      r.value = directed_hausdorff(P, Q);
      r.witness_p = P;
      r.witness_q = Q;
      r.algorithm = "precise";
    } else if (p_imp) {
      if (a.algorithm != "auto" && a.algorithm != "place-together")
        throw unsupported("imprecise P with precise Q is solved by place-together only");
      const auto& Q = std::get<PointSet>(doc.q);
      LowerBoundResult lb = place_together(std::get<ImprecisePointSet>(doc.p), Q, tol);
      r.value = lb.value;
      r.witness_p = std::move(lb.witness);
      r.witness_q = Q;
      r.algorithm = "place-together";
    } else {
      const auto& P = std::get<PointSet>(doc.p);
      const auto& Q = std::get<ImprecisePointSet>(doc.q);
      r.witness_p = P;
      if (a.algorithm == "auto") {
        ApproxResult x = hmin_dispatch(P, Q, tol);
        r.value = x.value;
        r.guarantee = {x.guarantee_factor == 1.0 ? "exact" : "approx", x.guarantee_factor};
        r.accepted_d = x.accepted_d;
        r.witness_q = std::move(x.witness_Q);
        r.algorithm = x.algorithm;
      } else if (a.algorithm == "independent-sets") {
        IndependentSetsResult x = independent_sets(P, Q, tol);
        r.algorithm = "independent-sets";
        if (x.threshold_exceeded) {
          // h_min is at least the threshold; no witness.
          r.value = x.threshold;
          r.guarantee = {"threshold-exceeded", 1.0};
          r.witness_p.clear();
        } else {
          r.value = x.value;
          r.witness_q = std::move(x.witness);
        }
      } else if (a.algorithm == "grown-discs") {
        ApproxResult x = grown_discs(P, Q, GonzalezCover{tol}, tol);
        r.value = x.value;
        r.guarantee = {"approx", x.guarantee_factor};
        r.accepted_d = x.accepted_d;
        r.witness_q = std::move(x.witness_Q);
        r.algorithm = x.algorithm;
      } else if (a.algorithm == "centre-points") {
        r.value = centre_points(P, Q);
        r.witness_q = centres(Q);
        // Factor 3 holds only on disjoint equal discs above 1.5 r; elsewhere
        // the centre placement carries no multiplicative bound.
        const bool bounded = pairwise_disjoint(Q) && equal_radii(Q, tol) && r.value > 1.5 * max_radius(Q);
        r.guarantee = {"approx", bounded ? 3.0 : std::numeric_limits<double>::infinity()};
        r.algorithm = "centre-points";
      } else {
        throw unsupported("algorithm " + a.algorithm + " does not compute hmin here");
      }
    }
  } else {
    throw InvalidInput("quantity must be hmin or hmax");
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string result_text(const ihd::ResultDocument& r) { return ihd::to_json(r).dump(2) + "\n"; }

struct GenArgs {
  std::string mode = "random", output, gadget = "single";
  std::size_t m = 3, n = 3;
  double box = 10.0, rmin = 0.2, rmax = 1.5, fraction = 0.5, epsilon = 1.0;
  bool disjoint = false, unit = false, p_imprecise = false, q_precise = false;
  std::uint64_t seed = 1;
};

std::string generate(const GenArgs& a) {
  using namespace ihd;
  if (a.mode == "random") {
    RandomOptions o;
    o.m = a.m;
    o.n = a.n;
    o.box = a.box;
    o.rmin = a.rmin;
    o.rmax = a.rmax;
    o.disjoint = a.disjoint;
    o.unit = a.unit;
    o.p_imprecise = a.p_imprecise;
    o.q_imprecise = !a.q_precise;
    o.seed = a.seed;
    return emit_instance(generate_random(o));
  }
  if (a.mode == "planted") {
    PlantedOptions o;
    o.m = a.m;
    o.n = a.n;
    o.box = a.box;
    o.rmin = a.rmin;
    o.rmax = a.rmax;
    o.unit = a.unit;
    o.fraction = a.fraction;
    o.seed = a.seed;
    return emit_instance(generate_planted(o));
  }
  if (a.mode == "gadget") return emit_instance(generate_gadget(a.gadget, a.epsilon));
  throw InvalidInput("unknown generator mode " + a.mode);
}

struct OracleArgs {
  std::string instance, output, quantity = "hmin";
  double step = 0.05;
};

std::string oracle(const OracleArgs& a) {
  using namespace ihd;
  const InstanceDocument doc = parse_instance(read_file(a.instance));
  if (side_size(doc.p) == 0 || side_size(doc.q) == 0) throw InvalidInput("instance has an empty side");
  nlohmann::json j;
  j["quantity"] = a.quantity;
  j["step"] = a.step;
  Bracket b;
  if (a.quantity == "hmax") {
    b = oracle_hmax_bracket(as_discs(doc.p), as_discs(doc.q), a.step);
  } else if (a.quantity == "hmin") {
    if (!is_imprecise(doc.p) && is_imprecise(doc.q)) {
      const auto& P = std::get<PointSet>(doc.p);
      const auto& Q = std::get<ImprecisePointSet>(doc.q);
      if (P.size() <= 6 && Q.size() <= 3) j["exact"] = oracle_hmin_exact(P, Q);
    }
    try {
      b = oracle_hmin_bracket(as_discs(doc.p), as_discs(doc.q), a.step);
    } catch (const BudgetExceeded&) {
      // The exact value alone is still an answer.
      if (!j.contains("exact")) throw;
      return j.dump(2) + "\n";
    }
  } else {
    throw InvalidInput("quantity must be hmin or hmax");
  }
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["resolution"] = b.resolution;
  return j.dump(2) + "\n";
}

struct RenderArgs {
  std::string instance, result, output;
  bool no_value_circles = false;
};

std::string render(const RenderArgs& a) {
  using namespace ihd;
  const InstanceDocument doc = parse_instance(read_file(a.instance));
  std::optional<ResultDocument> result;
  if (!a.result.empty()) result = parse_result(read_file(a.result));
  return render_svg(doc, result, !a.no_value_circles);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight bounds on the directed Hausdorff distance between imprecise planar point sets"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* c = app.add_subcommand("compute", "Compute hmin or hmax for an instance");
  c->add_option("instance", ca.instance, "Instance JSON file")->required();
  c->add_option("--quantity", ca.quantity, "hmin or hmax")->check(CLI::IsMember({"hmin", "hmax"}));
  c->add_option("--algorithm", ca.algorithm, "Algorithm to force")
      ->check(CLI::IsMember({"auto", "place-together", "independent-sets", "grown-discs", "centre-points", "upper-bound"}));
  c->add_option("--eps", ca.eps, "Predicate tolerance")->check(CLI::PositiveNumber);
  c->add_option("-o,--output", ca.output, "Output file (default stdout)");

  GenArgs ga;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("mode", ga.mode, "random, planted or gadget")->check(CLI::IsMember({"random", "planted", "gadget"}));
  g->add_option("--m", ga.m, "Number of P elements");
  g->add_option("--n", ga.n, "Number of Q elements");
  g->add_option("--box", ga.box, "Side of the square holding the centres");
  g->add_option("--rmin", ga.rmin, "Smallest radius");
  g->add_option("--rmax", ga.rmax, "Largest radius");
  g->add_flag("--disjoint", ga.disjoint, "Pairwise disjoint Q discs");
  g->add_flag("--unit", ga.unit, "All radii equal to 1");
  g->add_flag("--p-imprecise", ga.p_imprecise, "Make P a set of discs");
  g->add_flag("--q-precise", ga.q_precise, "Make Q a set of points");
  g->add_option("--fraction", ga.fraction, "Planted value as a fraction of the small threshold");
  g->add_option("--template", ga.gadget, "Gadget template: single or pair")->check(CLI::IsMember({"single", "pair"}));
  g->add_option("--epsilon", ga.epsilon, "Gadget scale")->check(CLI::PositiveNumber);
  g->add_option("--seed", ga.seed, "Random seed");
  g->add_option("-o,--output", ga.output, "Output file (default stdout)");

  OracleArgs oa;
  auto* o = app.add_subcommand("oracle", "Brute-force reference values for small instances");
  o->add_option("instance", oa.instance, "Instance JSON file")->required();
  o->add_option("--quantity", oa.quantity, "hmin or hmax")->check(CLI::IsMember({"hmin", "hmax"}));
  o->add_option("--step", oa.step, "Sampling pitch")->check(CLI::PositiveNumber);
  o->add_option("-o,--output", oa.output, "Output file (default stdout)");

  RenderArgs ra;
  auto* r = app.add_subcommand("render", "Draw an instance and optional result as SVG");
  r->add_option("instance", ra.instance, "Instance JSON file")->required();
  r->add_option("--result", ra.result, "Result JSON file");
  r->add_flag("--no-value-circles", ra.no_value_circles, "Omit the circles of radius value");
  r->add_option("-o,--output", ra.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kMalformed;
  }

  try {
    if (c->parsed()) write_output(ca.output, result_text(compute(ca)));
    else if (g->parsed()) write_output(ga.output, generate(ga));
    else if (o->parsed()) write_output(oa.output, oracle(oa));
    else if (r->parsed()) write_output(ra.output, render(ra));
  } catch (const ihd::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ihd::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kMalformed;
  } catch (const ihd::ConstructionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kMalformed;
  } catch (const ihd::Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
