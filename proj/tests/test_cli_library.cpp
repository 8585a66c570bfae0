#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "support.hpp"

using namespace ihd;
using namespace ihd::testing;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

InstanceDocument two_discs() {
  InstanceDocument doc;
  doc.name = "two discs";
  doc.p = ImprecisePointSet{{{0, 0}, 1}};
  doc.q = ImprecisePointSet{{{4, 0}, 1}};
  return doc;
}

}  // namespace

TEST(InstanceIo, RoundTrip) {
  InstanceDocument doc;
  doc.name = "mixed";
  doc.epsilon = 0.5;
  doc.expected_hmin = 0.125;
  doc.p = PointSet{{0.1, -2.0}, {1e-17, 3.0 / 7.0}};
  doc.q = ImprecisePointSet{{{1, 2}, 0.3}, {{-4, 0}, 0}};
  EXPECT_EQ(parse_instance(emit_instance(doc)), doc);
}

TEST(InstanceIo, RandomRoundTripIsExact) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomOptions o;
    o.seed = seed;
    o.p_imprecise = seed % 2 == 0;
    const auto doc = generate_random(o);
    EXPECT_EQ(parse_instance(emit_instance(doc)), doc);
  }
}

TEST(InstanceIo, MalformedInputs) {
  const char* bad[] = {
      "",
      "[1, 2]",
      "{\"p\": {\"kind\": \"precise\", \"points\": [[0, 0]]}}",
      "{\"p\": {\"kind\": \"precise\", \"points\": [[0]]}, \"q\": {\"kind\": \"precise\", \"points\": [[0, 0]]}}",
      "{\"p\": {\"kind\": \"fuzzy\", \"points\": [[0, 0]]}, \"q\": {\"kind\": \"precise\", \"points\": [[0, 0]]}}",
      "{\"p\": {\"kind\": \"precise\", \"points\": [[0, 0]]}, \"q\": {\"kind\": \"imprecise\", \"discs\": [[0, 0, -1]]}}",
      "{\"p\": {\"kind\": \"precise\", \"points\": [[\"a\", 0]]}, \"q\": {\"kind\": \"precise\", \"points\": [[0, 0]]}}",
      "{\"p\": {\"kind\": \"precise\", \"points\": [[0, 0]]}, \"q\": {\"kind\": \"precise\", \"points\": [[0, 0]]}, "
      "\"name\": 3}",
  };
  for (const char* text : bad) EXPECT_THROW(parse_instance(text), InvalidInput) << text;
}

TEST(ResultIo, InfiniteFactorIsNull) {
  ResultDocument r;
  r.quantity = "hmin";
  r.value = 1.5;
  r.guarantee = {"approx", std::numeric_limits<double>::infinity()};
  r.algorithm = "centre-points";
  const auto j = to_json(r);
  EXPECT_TRUE(j["guarantee"]["factor"].is_null());
  const auto back = parse_result(j.dump());
  EXPECT_TRUE(std::isinf(back.guarantee.factor));
  EXPECT_EQ(back.guarantee.kind, "approx");
}

TEST(ResultIo, RoundTrip) {
  ResultDocument r;
  r.quantity = "hmax";
  r.value = 6.0;
  r.guarantee = {"exact", 1.0};
  r.accepted_d = 2.0;
  r.witness_p = {{-1, 0}};
  r.witness_q = {{5, 0}};
  r.algorithm = "upper-bound";
  const auto back = parse_result(to_json(r).dump());
  EXPECT_EQ(back.value, 6.0);
  EXPECT_EQ(back.guarantee.factor, 1.0);
  EXPECT_EQ(back.accepted_d, 2.0);
  EXPECT_EQ(back.witness_p, r.witness_p);
  EXPECT_EQ(back.witness_q, r.witness_q);
  EXPECT_THROW(parse_result("{\"quantity\": \"hmin\"}"), InvalidInput);
}

TEST(Svg, ExactlyOneArrowWithAResult) {
  const auto doc = two_discs();
  const auto u = hmax(as_discs(doc.p), as_discs(doc.q));
  ResultDocument r;
  r.quantity = "hmax";
  r.value = u.value;
  r.witness_p = u.witness_P;
  r.witness_q = u.witness_Q;
  const std::string svg = render_svg(doc, r);
  EXPECT_EQ(count(svg, "class=\"arrow\""), 1u);
  EXPECT_EQ(count(svg, "class=\"value\""), 1u);
  EXPECT_EQ(count(svg, "class=\"q-disc\""), 1u);
  EXPECT_EQ(count(svg, "class=\"p-disc\""), 1u);
  EXPECT_EQ(count(render_svg(doc, r, false), "class=\"value\""), 0u);
  EXPECT_EQ(svg, render_svg(doc, r));
  EXPECT_EQ(count(svg, "<svg"), 1u);
  EXPECT_EQ(count(svg, "</svg>"), 1u);
}

TEST(Svg, NoArrowWithoutAResult) {
  const std::string svg = render_svg(two_discs());
  EXPECT_EQ(count(svg, "class=\"arrow\""), 0u);
  EXPECT_EQ(count(svg, "<title>two discs</title>"), 1u);
}

TEST(Svg, EscapesTheTitle) {
  auto doc = two_discs();
  doc.name = "a<b & c>";
  EXPECT_NE(render_svg(doc).find("<title>a&lt;b &amp; c&gt;</title>"), std::string::npos);
}

TEST(Generators, RandomIsDeterministic) {
  RandomOptions o;
  o.m = 8;
  o.n = 5;
  o.disjoint = true;
  o.seed = 42;
  EXPECT_EQ(emit_instance(generate_random(o)), emit_instance(generate_random(o)));
  const auto doc = generate_random(o);
  EXPECT_EQ(side_size(doc.p), 8u);
  EXPECT_EQ(side_size(doc.q), 5u);
  EXPECT_TRUE(pairwise_disjoint(std::get<ImprecisePointSet>(doc.q)));
  o.seed = 43;
  EXPECT_NE(emit_instance(generate_random(o)), emit_instance(generate_random(RandomOptions{})));
}

TEST(Generators, PlantedValueIsRecovered) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    PlantedOptions o;
    o.seed = seed;
    const auto doc = generate_planted(o);
    ASSERT_TRUE(doc.expected_hmin);
    const auto& P = std::get<PointSet>(doc.p);
    const auto& Q = std::get<ImprecisePointSet>(doc.q);
    const auto r = hmin_dispatch(P, Q);
    EXPECT_EQ(r.guarantee_factor, 1.0) << "seed " << seed;
    EXPECT_NEAR(r.value, *doc.expected_hmin, 1e-9) << "seed " << seed;
  }
}

TEST(Generators, PlantedRejectsBadOptions) {
  PlantedOptions o;
  o.fraction = 1.0;
  EXPECT_THROW(generate_planted(o), InvalidInput);
  o = {};
  o.m = 1;
  EXPECT_THROW(generate_planted(o), InvalidInput);
}

TEST(Generators, GadgetTemplates) {
  for (const char* which : {"single", "pair"}) {
    const auto doc = generate_gadget(which, 1.0);
    EXPECT_EQ(doc.epsilon, 1.0);
    EXPECT_TRUE(pairwise_disjoint(std::get<ImprecisePointSet>(doc.q)));
    EXPECT_EQ(emit_instance(doc), emit_instance(generate_gadget(which, 1.0)));
  }
  EXPECT_THROW(generate_gadget("triple", 1.0), InvalidInput);
}

TEST(Witness, DispatchWitnessReproducesTheValue) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomOptions o;
    o.seed = seed;
    o.m = 6;
    o.n = 4;
    o.disjoint = seed % 2 == 0;
    const auto doc = generate_random(o);
    const auto& P = std::get<PointSet>(doc.p);
    const auto& Q = std::get<ImprecisePointSet>(doc.q);
    const auto r = hmin_dispatch(P, Q);
    ASSERT_TRUE(is_realisation(r.witness_Q, Q)) << "seed " << seed;
    EXPECT_NEAR(directed_hausdorff(P, r.witness_Q), r.value, 1e-9) << "seed " << seed;
  }
}
