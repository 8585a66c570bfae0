#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace ihd;
using namespace ihd::testing;

namespace {

const std::vector<Disc> kUnit{{{0, 0}, 1}};

}  // namespace

TEST(CentrePoints, DistanceToTheCentres) {
  EXPECT_DOUBLE_EQ(centre_points(PointSet{{3, 0}}, kUnit), 3.0);
  EXPECT_DOUBLE_EQ(centre_points(PointSet{{2, 0}, {-2, 0}}, kUnit), 2.0);
  EXPECT_NEAR(oracle_hmin_exact(PointSet{{2, 0}, {-2, 0}}, kUnit), 2.0, 1e-9);
}

TEST(CentrePoints, EqualsHausdorffToCentres) {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const auto P = random_points(rng, 4, 10.0);
    const auto Q = random_discs(rng, 3, 10.0, 0.2, 1.5);
    EXPECT_EQ(centre_points(P, Q), directed_hausdorff(P, centres(Q)));
  }
}

TEST(Gonzalez, AllPointsAsCentres) {
  const PointSet pts{{0, 0}, {4, 0}, {0, 4}};
  EXPECT_EQ(gonzalez_k_centre(pts, 3).radius, 0.0);
  EXPECT_EQ(gonzalez_k_centre(pts, 7).centres.size(), 3u);
}

TEST(Gonzalez, GreedyTrace) {
  const PointSet pts{{0, 0}, {4, 0}, {0, 4}};
  const auto one = gonzalez_k_centre(pts, 1);
  EXPECT_EQ(one.centres, (PointSet{{0, 0}}));
  EXPECT_DOUBLE_EQ(one.radius, 4.0);
  EXPECT_LE(one.radius, 2.0 * 2.0 * std::sqrt(2.0));
  const auto two = gonzalez_k_centre(pts, 2);
  EXPECT_EQ(two.centres, (PointSet{{0, 0}, {4, 0}}));
  EXPECT_DOUBLE_EQ(two.radius, 4.0);
}

TEST(GonzalezProperty, WithinTwiceTheExactCoverRadius) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(100 + seed);
    const auto pts = random_points(rng, pick(rng, 2, 8), 10.0);
    const std::size_t k = pick(rng, 1, 3);
    const double greedy = gonzalez_k_centre(pts, k).radius;
    // Smallest radius the exact cover accepts, by bisection.
    double lo = 0.0, hi = greedy;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (exact_k_cover(pts, k, mid) ? hi : lo) = mid;
    }
    EXPECT_LE(greedy, 2.0 * hi + 1e-9) << "seed " << seed;
  }
}

TEST(ExactCover, TangentCirclesMeetAtTheMidpoint) {
  const auto c = exact_k_cover(PointSet{{0, 0}, {1, 0}}, 1, 0.5);
  ASSERT_TRUE(c);
  ASSERT_EQ(c->size(), 1u);
  EXPECT_NEAR((*c)[0].x, 0.5, 1e-9);
  EXPECT_NEAR((*c)[0].y, 0.0, 1e-9);
}

TEST(ExactCover, RadiusTooSmall) { EXPECT_FALSE(exact_k_cover(PointSet{{0, 0}, {1, 0}}, 1, 0.4)); }

TEST(ExactCover, ZeroRadiusCountsDistinctLocations) {
  EXPECT_TRUE(exact_k_cover(PointSet{{0, 0}, {1, 1}, {0, 0}}, 2, 0.0));
  EXPECT_FALSE(exact_k_cover(PointSet{{0, 0}, {1, 1}, {2, 0}}, 2, 0.0));
}

TEST(ExactCover, RejectsLargeK) { EXPECT_THROW(exact_k_cover(PointSet{{0, 0}}, 5, 1.0), InvalidInput); }

TEST(ExactCover, CentresCoverEveryPoint) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto pts = random_points(rng, pick(rng, 1, 8), 6.0);
    const std::size_t k = pick(rng, 1, 4);
    const double d = uniform(rng, 0.5, 3.0);
    if (const auto c = exact_k_cover(pts, k, d)) {
      EXPECT_LE(c->size(), k);
      for (Point p : pts) EXPECT_LE(detail::nearest(p, *c), d * (1 + 1e-9) + 1e-9);
    }
  }
}

TEST(CellDecomposition, SingleGroup) {
  const auto g = cell_decomposition(PointSet{{2, 0}}, kUnit, 1.0);
  ASSERT_TRUE(g);
  ASSERT_EQ(g->size(), 1u);
  EXPECT_EQ((*g)[0].key, std::vector<std::size_t>{0});
}

TEST(CellDecomposition, GroupsInKeyOrder) {
  const std::vector<Disc> Q{{{0, 0}, 1}, {{2.2, 0}, 1}};
  const auto g = cell_decomposition(PointSet{{1.1, 0}, {-0.5, 0}}, Q, 0.2);
  ASSERT_TRUE(g);
  ASSERT_EQ(g->size(), 2u);
  EXPECT_EQ((*g)[0].key, std::vector<std::size_t>{0});
  EXPECT_EQ((*g)[0].members, std::vector<std::size_t>{1});
  EXPECT_EQ((*g)[1].key, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ((*g)[1].members, std::vector<std::size_t>{0});
}

TEST(CellDecomposition, UncoveredPoint) { EXPECT_FALSE(cell_decomposition(PointSet{{5, 5}}, kUnit, 0.5)); }

TEST(GrownDiscsDecide, MovesTheCircleIntoTheDisc) {
  const auto d = grown_discs_decide(PointSet{{2, 0}}, kUnit, 1.0, GonzalezCover{});
  ASSERT_TRUE(d.feasible);
  ASSERT_EQ(d.circles.size(), 1u);
  EXPECT_EQ(d.circles[0].centre, (Point{1, 0}));
  EXPECT_DOUBLE_EQ(directed_hausdorff(PointSet{{2, 0}}, d.witness), 1.0);
}

TEST(GrownDiscsDecide, UncoveredAtSmallerRadius) {
  EXPECT_FALSE(grown_discs_decide(PointSet{{2, 0}}, kUnit, 0.5, GonzalezCover{}).feasible);
}

TEST(GrownDiscsDecide, GreedyRadiusTooLargeThenAccepted) {
  const PointSet P{{2, 0}, {-2, 0}};
  EXPECT_FALSE(grown_discs_decide(P, kUnit, 1.0, GonzalezCover{}).feasible);
  const auto d = grown_discs_decide(P, kUnit, 2.0, GonzalezCover{});
  ASSERT_TRUE(d.feasible);
  EXPECT_EQ(d.witness[0], (Point{1, 0}));
  EXPECT_DOUBLE_EQ(directed_hausdorff(P, d.witness), 3.0);
}

// A point marked through growth ends up beyond (c + 2) d once its circle
// moves into the disc; the decision must still certify its witness.
TEST(GrownDiscsDecide, MarkedPointLostByTheMove) {
  const std::vector<Disc> Q{{{5.3860134339244743, 4.1383782224842118}, 1},
                            {{2.281179547859713, 1.7542495465317729}, 1},
                            {{0.72454033806977447, 3.8650475452569486}, 1}};
  const PointSet P{{1.0633695498139639, 1.6805538588103626}, {0.1636180904927067, 2.5582693080311998}};
  const double opt = oracle_hmin_exact(P, Q);
  EXPECT_NEAR(opt, 0.42207704753073921, 1e-12);
  const auto d = grown_discs_decide(P, Q, opt, ExactCover{});
  ASSERT_TRUE(d.feasible);
  EXPECT_LE(directed_hausdorff(P, d.witness), 3.0 * opt + 1e-9);
  EXPECT_LE(hmin_dispatch(P, Q).value, 3.0 * opt + 1e-9);
}

TEST(GrownDiscs, SinglePoint) {
  const auto r = grown_discs(PointSet{{2, 0}}, kUnit, GonzalezCover{});
  EXPECT_DOUBLE_EQ(*r.accepted_d, 1.0);
  EXPECT_DOUBLE_EQ(r.value, 1.0);
  EXPECT_EQ(r.guarantee_factor, 4.0);
  EXPECT_EQ(r.algorithm, "grown-discs/gonzalez");
}

TEST(GrownDiscs, OppositePoints) {
  const PointSet P{{2, 0}, {-2, 0}};
  const auto values = candidate_distances(P, kUnit);
  ASSERT_EQ(values.size(), 3u);
  EXPECT_NEAR(values[0], 1.0, 1e-12);
  EXPECT_NEAR(values[1], 2.0, 1e-12);
  EXPECT_NEAR(values[2], std::sqrt(5.0), 1e-12);
  const auto r = grown_discs(P, kUnit, GonzalezCover{});
  EXPECT_NEAR(*r.accepted_d, 2.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.value, 3.0);
}

TEST(GrownDiscs, EmptyP) { EXPECT_EQ(grown_discs(PointSet{}, kUnit, GonzalezCover{}).value, 0.0); }

TEST(HminDispatch, PlantedDisjointIsExact) {
  const auto r = hmin_dispatch(PointSet{{1.05, 0}, {1.95, 0}}, std::vector<Disc>{{{0, 0}, 1}, {{3, 0}, 1}});
  EXPECT_NEAR(r.value, 0.05, 1e-12);
  EXPECT_EQ(r.guarantee_factor, 1.0);
  EXPECT_EQ(r.algorithm, "independent-sets");
}

TEST(HminDispatch, FarPointUsesCentrePoints) {
  const PointSet P{{10, 0}};
  const auto r = hmin_dispatch(P, kUnit);
  EXPECT_DOUBLE_EQ(r.value, 10.0);
  EXPECT_EQ(r.guarantee_factor, 3.0);
  EXPECT_EQ(r.algorithm, "centre-points");
  EXPECT_NEAR(oracle_hmin_exact(P, kUnit), 9.0, 1e-9);
}

TEST(HminDispatch, OverlappingMixedRadiiUsesGrownDiscs) {
  const std::vector<Disc> Q{{{0, 0}, 1}, {{1.5, 0}, 0.7}, {{0.5, 1.2}, 1.3}};
  const PointSet P{{3, 1}, {-2, 0.5}, {0.4, -1.8}, {1, 3}};
  const auto r = hmin_dispatch(P, Q);
  EXPECT_EQ(r.algorithm, "grown-discs/gonzalez");
  const double opt = oracle_hmin_exact(P, Q);
  EXPECT_GE(r.value, opt - 1e-9);
  EXPECT_LE(r.value, 4.0 * opt + 1e-9);
}

TEST(GrownDiscsProperty, FactorSoundnessAndCompleteness) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(200 + seed);
    const auto P = random_points(rng, pick(rng, 1, 5), 4.0);
    const auto Q = random_discs(rng, pick(rng, 1, 3), 4.0, 0.2, 1.5);
    const double opt = oracle_hmin_exact(P, Q);
    const auto r = grown_discs(P, Q, GonzalezCover{});
    EXPECT_GE(r.value, opt - 1e-9) << "seed " << seed;
    EXPECT_LE(r.value, r.guarantee_factor * opt + 1e-9) << "seed " << seed;
    EXPECT_TRUE(is_realisation(r.witness_Q, Q));
    EXPECT_NEAR(directed_hausdorff(P, r.witness_Q), r.value, 1e-9);
    EXPECT_TRUE(grown_discs_decide(P, Q, opt, GonzalezCover{}).feasible) << "seed " << seed;
    for (double d : candidate_distances(P, Q)) {
      const auto dec = grown_discs_decide(P, Q, d, GonzalezCover{});
      if (dec.feasible) {
        EXPECT_LE(directed_hausdorff(P, dec.witness), 4.0 * d + 1e-9) << "seed " << seed;
      }
    }
  }
}

TEST(GrownDiscsProperty, ExactCoverDecisionIsSound) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(400 + seed);
    const auto P = random_points(rng, pick(rng, 1, 5), 4.0);
    const auto Q = random_discs(rng, pick(rng, 1, 3), 4.0, 0.2, 1.5);
    const double opt = oracle_hmin_exact(P, Q);
    EXPECT_TRUE(grown_discs_decide(P, Q, opt, ExactCover{}).feasible) << "seed " << seed;
    const auto r = grown_discs(P, Q, ExactCover{});
    EXPECT_LE(r.value, 3.0 * opt + 1e-9) << "seed " << seed;
  }
}

TEST(HminDispatchProperty, DisjointUnitDiscsWithinFactorThree) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(500 + seed);
    const auto Q = disjoint_discs(rng, pick(rng, 2, 3), 5.0, 1.0, 1.0, true);
    PointSet P;
    for (std::size_t i = pick(rng, 1, 6); i > 0; --i) {
      const Disc& d = Q[pick(rng, 0, Q.size() - 1)];
      P.push_back(d.centre + uniform(rng, 0.8, 1.6) * unit_from_angle(uniform(rng, 0, 2 * std::numbers::pi)));
    }
    const double opt = oracle_hmin_exact(P, Q);
    ApproxResult r;
    ASSERT_NO_THROW(r = hmin_dispatch(P, Q)) << "seed " << seed;
    EXPECT_GE(r.value, opt - 1e-9);
    EXPECT_LE(r.value, r.guarantee_factor * opt + 1e-9) << "seed " << seed;
    EXPECT_LE(r.guarantee_factor, 3.0);
  }
}

TEST(HminDispatchProperty, CellKeysStaySmallBelowHalfTheRadius) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(600 + seed);
    const auto Q = disjoint_discs(rng, 6, 6.0, 1.0, 1.0, true);
    const auto P = random_points(rng, 20, 6.0);
    const auto groups = cell_decomposition(P, Q, 0.499);
    if (!groups) continue;
    for (const auto& g : *groups) EXPECT_LE(g.key.size(), 4u);
  }
}
