#include <gtest/gtest.h>

#include <set>

#include "fibcalc/twoknot/two_knot.hpp"
#include "support.hpp"

namespace fibcalc {
namespace {

CurveSpec curve(const std::string& n) { return std::get<CurveSpec>(curated_payload(n)); }

TEST(DoubleDisk, TrivialDiskGivesUnknottedSphere) {
  const FiberedTwoKnot s = double_disk(trivial_disk(), 0);
  EXPECT_EQ(s, unknotted_sphere());
  EXPECT_EQ(two_knot_group(s).to_string(), "< t | >");
  EXPECT_EQ(spin(unknot()), unknotted_sphere());
}

TEST(DoubleDisk, ParityDependsOnFramingModTwo) {
  const FiberedDisk d = half_spin(catalog_knot("trefoil_R"));
  EXPECT_EQ(double_disk(d, 3).gluck_parity, 1);
  EXPECT_EQ(double_disk(d, 4).gluck_parity, 0);
  EXPECT_EQ(double_disk(d, -1).gluck_parity, 1);
  for (Int k = -4; k <= 4; ++k) EXPECT_EQ(two_knot_group(double_disk(d, k)), two_knot_group(double_disk(d, 0)));
  EXPECT_EQ(double_disk(d, 0).ambient, TwoKnotAmbient::S4);
  CurveSpec e = curve("halfspin_disk_c1");
  e.flags.unknotted_in_ambient = false;
  EXPECT_EQ(double_disk(disk_twist(d, e, 1), 0).ambient, TwoKnotAmbient::HomotopyS4);
  EXPECT_THROW(double_disk(fiber_sum_with_summand(d, "x"), 0), Unsupported);
}

TEST(Spin, AlexanderAndGroup) {
  for (const auto& n : catalog_knot_names()) {
    const FiberedKnot k = catalog_knot(n);
    const FiberedTwoKnot s = spin(k);
    EXPECT_EQ(s.fiber_rank, 2 * k.genus()) << n;
    EXPECT_EQ(alexander_poly(s), alexander_poly(k)) << n;
    EXPECT_EQ(h1(two_knot_group(s)), std::vector<Int>({0})) << n;
    EXPECT_EQ(two_knot_group(s).relators.size(), static_cast<std::size_t>(s.fiber_rank)) << n;
    EXPECT_EQ(alexander_from_presentation(two_knot_group(s)), alexander_poly(k)) << n;
  }
}

TEST(Spin, HomCountsMatchKnotGroup) {
  for (const char* n : {"trefoil_R", "figure8"})
    for (const auto& g : catalog_group_names())
      EXPECT_EQ(count_homs(two_knot_group(spin(catalog_knot(n))), catalog_group(g)),
                count_homs(knot_group(catalog_knot(n)), catalog_group(g)))
          << n << " " << g;
}

TEST(Gluck, Involution) {
  const FiberedTwoKnot s = spin(catalog_knot("trefoil_R"));
  EXPECT_EQ(gluck(s).gluck_parity, 1);
  const FiberedTwoKnot back = gluck(gluck(s));
  EXPECT_EQ(back, s);
  EXPECT_EQ(back.name, s.name);
  EXPECT_EQ(back.provenance, s.provenance);
  EXPECT_EQ(two_knot_group(gluck(s)), two_knot_group(s));
  EXPECT_EQ(sphere_twist(s, 3).gluck_parity, 1);
  EXPECT_EQ(two_knot_group(sphere_twist(s, 1)), two_knot_group(s));
}

TEST(DiskTwistDoubles, AtMostTwoClasses) {
  const FiberedDisk d = half_spin(catalog_knot("trefoil_R"));
  const CurveSpec e = curve("halfspin_disk_c1");
  std::set<std::pair<std::string, int>> pairs;
  std::set<std::string> presentations;
  for (Int m = -3; m <= 3; ++m) {
    const FiberedTwoKnot s = double_disk(disk_twist(d, e, m), m);
    pairs.insert({two_knot_group(s).to_string(), s.gluck_parity});
    presentations.insert(two_knot_group(s).to_string());
  }
  EXPECT_LE(pairs.size(), 2u);
  EXPECT_EQ(presentations.size(), 1u);
}

TEST(Validate, RejectsBadData) {
  FiberedTwoKnot s = spin(catalog_knot("trefoil_R"));
  s.gluck_parity = 2;
  EXPECT_THROW(s.validate(), InvariantViolation);
  s = unknotted_sphere();
  s.fiber_rank = 1;
  s.monodromy_pi1 = FreeGroupMap::identity(1);
  EXPECT_THROW(s.validate(), InvariantViolation);  // H_1 = Z^2
}

TEST(Halving, TrefoilFamily) {
  const FiberedTwoKnot s = spin(catalog_knot("trefoil_R"));
  const auto family = halving_family(s, {0, 1, 2, -3});
  ASSERT_EQ(family.size(), 4u);
  for (const auto& e : family) {
    EXPECT_EQ(e.interior_presentation, family[0].interior_presentation);
    EXPECT_TRUE(e.contractibility.ok());
    EXPECT_TRUE(h1(e.interior_presentation).empty());
    EXPECT_EQ(e.contractibility.h1_snf, std::vector<Int>({1, 1}));
    for (const auto& g : contractibility_groups()) EXPECT_EQ(e.contractibility.hom_counts.at(g), 1u);
  }
  EXPECT_EQ(family[0].boundary_descriptor.to_string(), "Y");
  EXPECT_EQ(family[1].boundary_descriptor.to_string(), "Y(-1/1)");
  EXPECT_EQ(family[2].boundary_descriptor, (FillingDescriptor{"Y", -1, 2}));
  EXPECT_EQ(family[3].boundary_descriptor, (FillingDescriptor{"Y", 1, 3}));
  // det(I - A) for the trefoil matrix
  const IntMatrix a = catalog_knot("trefoil_R").monodromy.homological_action();
  EXPECT_EQ((IntMatrix::identity(2) - a).determinant(), 1);
}

TEST(Halving, HomotopyRibbonCatalog) {
  for (const auto& n : catalog_knot_names())
    for (const auto& e : halving_family(spin(catalog_knot(n)), {0, 1})) EXPECT_TRUE(e.contractibility.ok()) << n;
}

TEST(SeifertMultiplicity, Formula) {
  EXPECT_EQ(seifert_filling_multiplicity(2, 3, 5), 7);
  EXPECT_EQ(seifert_filling_multiplicity(1, 0, 0), 0);
  for (Int m = -3; m <= 3; ++m) EXPECT_EQ(seifert_filling_multiplicity(0, 1, m), -1);
  EXPECT_THROW(seifert_filling_multiplicity(2, 4, 1), PreconditionError);
}

TEST(TorusTwist, Basics) {
  const FiberedTwoKnot s = spin(catalog_knot("trefoil_R"));
  EXPECT_EQ(torus_twist(s, standard_curve(1, "a1"), 0), s);
  EXPECT_THROW(torus_twist(double_disk(half_spin(catalog_knot("trefoil_R")), 0), standard_curve(1, "a1")), PreconditionError);
  EXPECT_THROW(torus_twist(s, standard_curve(2, "a1")), RankMismatch);
  FiberedTwoKnot t = s;
  for (const auto& step : inverse_twist_word(*catalog_knot("trefoil_R").monodromy.twist_word()))
    t = torus_twist(t, step.curve, step.exponent);
  EXPECT_TRUE(t.monodromy_pi1.is_identity());
  EXPECT_EQ(alexander_poly(t).dense_coefficients(), std::vector<Int>({1, -2, 1}));
  EXPECT_EQ(h1(two_knot_group(t)), std::vector<Int>({0, 0, 0}));
}

TEST(TorusTwist, CommutesWithSpin) {
  const FiberedKnot sq = catalog_knot("square_knot");
  for (const char* n : {"square_knot_stallings_c1", "square_knot_stallings_c2"})
    for (Int m = -2; m <= 2; ++m) {
      const CurveSpec c = curve(n);
      EXPECT_EQ(spin(stallings_twist(sq, c, m)), torus_twist(spin(sq), c, m)) << n << " " << m;
    }
}

TEST(Plan, EqualKnotsGiveEmptyPlan) {
  const FiberedKnot t = catalog_knot("trefoil_R");
  const SurgeryPlan p = torus_surgery_plan(t, t);
  EXPECT_TRUE(p.steps.empty());
  EXPECT_EQ(replay_plan(spin(t), p), spin(t));
}

TEST(Plan, TrefoilToFigureEight) {
  const FiberedKnot t = catalog_knot("trefoil_R"), f = catalog_knot("figure8");
  const SurgeryPlan p = torus_surgery_plan(t, f);
  EXPECT_EQ(p.phase_count(), 1);
  for (const auto& s : p.steps) EXPECT_NE(s.twist_sign, 0);
  EXPECT_EQ(replay_plan(spin(t), p), spin(f));
}

TEST(Plan, StabilizationCount) {
  const FiberedKnot t = catalog_knot("trefoil_R");
  const FiberedKnot g3 = connected_sum(catalog_knot("square_knot"), catalog_knot("figure8"));
  const SurgeryPlan p = torus_surgery_plan(t, g3);
  EXPECT_EQ(p.phase(1).size(), 4u);
  for (const auto& s : p.phase(1)) EXPECT_EQ(s.twist_sign, 0);
  EXPECT_EQ(p.phase_count(), 2);
  EXPECT_EQ(replay_plan(spin(t), p), spin(g3));
  const SurgeryPlan back = torus_surgery_plan(g3, t);
  EXPECT_EQ(back.phase(back.phase_count()).size(), 4u);
  EXPECT_EQ(replay_plan(spin(g3), back), spin(t));
  const SurgeryPlan from_unknot = torus_surgery_plan(unknot(), t);
  EXPECT_EQ(from_unknot.phase(1).size(), 2u);
  EXPECT_EQ(replay_plan(unknotted_sphere(), from_unknot), spin(t));
}

TEST(Plan, RandomReplays) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int g1 = 1 + trial % 2, g2 = 1 + (trial / 2) % 2;
    const FiberedKnot k1{"k1", KnotAmbient::s3(), SurfaceMonodromy::from_twist_word(g1, testing::random_twist_word(rng, g1, 5))};
    const FiberedKnot k2{"k2", KnotAmbient::s3(), SurfaceMonodromy::from_twist_word(g2, testing::random_twist_word(rng, g2, 5))};
    const auto det1 = (IntMatrix::identity(2 * g1) - k1.monodromy.homological_action()).determinant();
    const auto det2 = (IntMatrix::identity(2 * g2) - k2.monodromy.homological_action()).determinant();
    if (std::abs(det1) != 1 || std::abs(det2) != 1) continue;
    EXPECT_EQ(replay_plan(spin(k1), torus_surgery_plan(k1, k2)), spin(k2));
  }
}

TEST(Plan, NeedsTwistWords) {
  const FiberedKnot t = catalog_knot("trefoil_R");
  const FiberedKnot bare{"bare", KnotAmbient::s3(),
                         SurfaceMonodromy(1, t.monodromy.homological_action(), t.monodromy.pi1_action(), std::nullopt)};
  EXPECT_THROW(torus_surgery_plan(bare, t), PreconditionError);
}

}  // namespace
}  // namespace fibcalc
