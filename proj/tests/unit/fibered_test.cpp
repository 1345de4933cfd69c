#include <gtest/gtest.h>

#include "fibcalc/fibered/fibered_knot.hpp"
#include "support.hpp"

namespace fibcalc {
namespace {

using testing::char_poly_2x2;
using testing::convolve;

TEST(Catalog, GenusOneAlexanderMatchesTwoByTwoFormula) {
  for (const char* n : {"trefoil_R", "trefoil_L", "figure8"}) {
    const FiberedKnot k = catalog_knot(n);
    EXPECT_EQ(alexander_poly(k).dense_coefficients(), char_poly_2x2(k.monodromy.homological_action())) << n;
  }
  EXPECT_EQ(alexander_poly(catalog_knot("trefoil_R")).dense_coefficients(), std::vector<Int>({1, -1, 1}));
  EXPECT_EQ(alexander_poly(catalog_knot("figure8")).dense_coefficients(), std::vector<Int>({1, -3, 1}));
}

TEST(Catalog, CompositeKnotsMultiplyAlexander) {
  const std::vector<Int> trefoil = {1, -1, 1};
  EXPECT_EQ(alexander_poly(catalog_knot("square_knot")).dense_coefficients(), convolve(trefoil, trefoil));
  EXPECT_EQ(alexander_poly(catalog_knot("granny_knot")).dense_coefficients(), convolve(trefoil, trefoil));
  EXPECT_EQ(alexander_poly(catalog_knot("cinquefoil")).dense_coefficients(), std::vector<Int>({1, -1, 1, -1, 1}));
  EXPECT_EQ(alexander_poly(unknot()).dense_coefficients(), std::vector<Int>({1}));
}

TEST(Catalog, AlexanderIsPalindromicAndUnitAtOne) {
  for (const auto& n : catalog_knot_names()) {
    const FiberedKnot k = catalog_knot(n);
    const auto c = alexander_poly(k).dense_coefficients();
    EXPECT_EQ(c, std::vector<Int>(c.rbegin(), c.rend())) << n;
    EXPECT_EQ(std::abs(alexander_poly(k).evaluate_at_one()), 1) << n;
    EXPECT_TRUE(validate_knot(k).empty()) << n;
    EXPECT_EQ(static_cast<int>(c.size()), 2 * k.genus() + 1) << n;
  }
  EXPECT_THROW(catalog_knot("a1"), UnknownName);
  EXPECT_THROW(catalog_knot("nope"), UnknownName);
}

TEST(KnotGroup, HnnRelators) {
  const GroupPresentation p = knot_group(catalog_knot("trefoil_R"));
  EXPECT_EQ(p.generator_names, std::vector<std::string>({"a1", "b1", "t"}));
  ASSERT_EQ(p.relators.size(), 2u);
  // t a1 T (phi(a1))^-1
  EXPECT_EQ(format_word(p.relators[0], p.generator_names).substr(0, 7), "t a1 T ");
  const GroupPresentation u = knot_group(unknot());
  EXPECT_EQ(u.to_string(), "< t | >");
}

TEST(KnotGroup, NeedsPi1Data) {
  const SurfaceMonodromy m(1, transvection(std::vector<Int>{1, 0}), std::nullopt, std::nullopt);
  EXPECT_THROW(knot_group(FiberedKnot{"homological", KnotAmbient::s3(), m}), Unsupported);
}

TEST(ValidateKnot, WarnsOnBadDeltaAtOne) {
  // trace -1, so Delta(1) = 3
  const SurfaceMonodromy m(1, IntMatrix::from_rows({{-1, 1}, {-1, 0}}), std::nullopt, std::nullopt);
  const FiberedKnot k{"odd", KnotAmbient::s3(), m};
  EXPECT_EQ(alexander_poly(k).evaluate_at_one(), 3);
  EXPECT_EQ(validate_knot(k).size(), 1u);
}

TEST(StallingsTwist, Preconditions) {
  const FiberedKnot sq = catalog_knot("square_knot");
  EXPECT_THROW(stallings_twist(sq, standard_curve(2, "a1"), 1), PreconditionError);
  const auto c1 = std::get<CurveSpec>(curated_payload("square_knot_stallings_c1"));
  EXPECT_THROW(stallings_twist(catalog_knot("trefoil_R"), c1, 1), RankMismatch);
  EXPECT_EQ(stallings_twist(sq, c1, 0), sq);
  EXPECT_EQ(stallings_twist(stallings_twist(sq, c1, 3), c1, -3), sq);
}

TEST(StallingsTwist, HomologicalEffectIsTransvection) {
  const FiberedKnot sq = catalog_knot("square_knot");
  for (const char* n : {"square_knot_stallings_c1", "square_knot_stallings_c2"}) {
    const auto c = std::get<CurveSpec>(curated_payload(n));
    for (Int m = -2; m <= 2; ++m) {
      const FiberedKnot k = stallings_twist(sq, c, m);
      EXPECT_EQ(k.monodromy.homological_action(), sq.monodromy.homological_action() * transvection(c.homology_class, m));
      EXPECT_EQ(std::abs(alexander_poly(k).evaluate_at_one()), 1);
    }
  }
}

TEST(DistinctnessBound, Cases) {
  EXPECT_TRUE(distinctness_bound(1, 2));
  EXPECT_TRUE(distinctness_bound(-1, 2));
  EXPECT_TRUE(distinctness_bound(16, 2));
  EXPECT_FALSE(distinctness_bound(10, 2));
  EXPECT_FALSE(distinctness_bound(15, 2));
  EXPECT_TRUE(distinctness_bound(25, 3));
  EXPECT_FALSE(distinctness_bound(24, 3));
  EXPECT_FALSE(distinctness_bound(0, 2));
  EXPECT_THROW(distinctness_bound(5, 1), PreconditionError);
}

TEST(ConnectedSum, AmbientsMustAgree) {
  const FiberedKnot t = catalog_knot("trefoil_R");
  EXPECT_EQ(connected_sum(t, mirror_knot(t)), catalog_knot("square_knot"));
  EXPECT_EQ(connected_sum(t, t), catalog_knot("granny_knot"));
  const FiberedKnot d = dual_knot_surgery_descriptor(t, 1);
  EXPECT_THROW(connected_sum(t, d), PreconditionError);
  EXPECT_EQ(connected_sum(unknot(), t).monodromy, t.monodromy);
}

TEST(DualKnot, Descriptor) {
  const FiberedKnot d = dual_knot_surgery_descriptor(catalog_knot("figure8"), -2);
  EXPECT_EQ(d.ambient.kind, KnotAmbient::Kind::HomologySphere);
  EXPECT_EQ(d.ambient.descriptor, "S3_{1/-2}(figure8)");
  EXPECT_EQ(d.monodromy, catalog_knot("figure8").monodromy);
  EXPECT_THROW(dual_knot_surgery_descriptor(catalog_knot("figure8"), 0), PreconditionError);
  EXPECT_THROW(dual_knot_surgery_descriptor(d, 1), PreconditionError);
}

}  // namespace
}  // namespace fibcalc
