#include <gtest/gtest.h>

#include "fibcalc/mcg/mcg.hpp"
#include "support.hpp"

namespace fibcalc {
namespace {

TEST(Transvection, StandardCurvesOnTorus) {
  EXPECT_EQ(transvection(std::vector<Int>{1, 0}), IntMatrix::from_rows({{1, -1}, {0, 1}}));
  EXPECT_EQ(transvection(std::vector<Int>{0, 1}), IntMatrix::from_rows({{1, 0}, {1, 1}}));
  EXPECT_EQ(transvection(std::vector<Int>{1, 0}, -2), IntMatrix::from_rows({{1, 2}, {0, 1}}));
}

TEST(Transvection, FormulaOracle) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<Int> d(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Int> c(4), x(4);
    for (auto& v : c) v = d(rng);
    for (auto& v : x) v = d(rng);
    const Int m = d(rng);
    const Int pair = intersection_pairing(x, c);
    std::vector<Int> expect(4);
    for (int i = 0; i < 4; ++i) expect[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + m * pair * c[static_cast<std::size_t>(i)];
    EXPECT_EQ(transvection(c, m) * x, expect);
    EXPECT_TRUE(is_symplectic(transvection(c, m)));
  }
}

TEST(Pairing, Conventions) {
  EXPECT_EQ(intersection_pairing({1, 0}, {0, 1}), 1);
  EXPECT_EQ(intersection_pairing({0, 1}, {1, 0}), -1);
  EXPECT_FALSE(is_symplectic(IntMatrix::from_rows({{2, 0}, {0, 1}})));
}

TEST(Curves, PayloadAbelianizesToTransvection) {
  for (int g : {1, 2})
    for (const auto& c : testing::twist_curves(g)) {
      ASSERT_TRUE(c.pi1_payload);
      EXPECT_EQ(abelianize(*c.pi1_payload), transvection(c));
    }
  EXPECT_FALSE(algebraic_twist_payload(2, {1, 1, 0, 0}).has_value());
  EXPECT_THROW(standard_curve(1, "a2"), UnknownName);
}

TEST(Curves, DiskFlagNeedsLagrangianClass) {
  CurveFlags f;
  f.bounds_disk_in_handlebody = true;
  EXPECT_NO_THROW(make_curve("e", 1, {0, 1}, f));
  EXPECT_THROW(make_curve("e", 1, {1, 0}, f), InvariantViolation);
}

TEST(TwistWords, ReductionMergesAndCancels) {
  const CurveSpec a = standard_curve(1, "a1"), b = standard_curve(1, "b1");
  EXPECT_TRUE(reduce_twist_word({{a, 2}, {a, -2}}).empty());
  const TwistWord w = reduce_twist_word({{a, 1}, {b, 0}, {a, 2}, {b, 1}});
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].exponent, 3);
  const TwistWord x = {{a, 1}, {b, -2}};
  const auto m = SurfaceMonodromy::from_twist_word(1, x);
  const auto inv = SurfaceMonodromy::from_twist_word(1, inverse_twist_word(x));
  EXPECT_TRUE(compose_monodromy(m, inv).homological_action().is_identity());
  EXPECT_TRUE(compose_monodromy(m, inv).pi1_action()->is_identity());
}

TEST(Monodromy, TrefoilData) {
  const auto m = std::get<SurfaceMonodromy>(curated_payload("trefoil_R"));
  EXPECT_EQ(m.homological_action(), IntMatrix::from_rows({{0, -1}, {1, 1}}));
  ASSERT_TRUE(m.pi1_action());
  EXPECT_EQ(abelianize(*m.pi1_action()), m.homological_action());
  EXPECT_EQ(m.homological_action().pow(6), IntMatrix::identity(2));
}

TEST(Monodromy, ConstructorRejectsInconsistentData) {
  const auto a = standard_curve(1, "a1");
  EXPECT_THROW(SurfaceMonodromy(1, IntMatrix::from_rows({{2, 0}, {0, 1}}), std::nullopt, std::nullopt), InvariantViolation);
  EXPECT_THROW(SurfaceMonodromy(1, transvection(a), std::nullopt, TwistWord{{a, 2}}), InvariantViolation);
  EXPECT_NO_THROW(SurfaceMonodromy(1, transvection(a), std::nullopt, TwistWord{{a, 1}}));
}

TEST(Monodromy, RandomWordsAreConsistent) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const int g = 1 + trial % 2;
    const auto w = testing::random_twist_word(rng, g, 6);
    const auto m = SurfaceMonodromy::from_twist_word(g, w);
    IntMatrix expect = IntMatrix::identity(2 * g);
    for (const auto& s : w) expect = expect * transvection(s.curve.homology_class, s.exponent);
    EXPECT_EQ(m.homological_action(), expect);
    EXPECT_EQ(abelianize(*m.pi1_action()), expect);
    EXPECT_TRUE(is_symplectic(expect));
  }
}

TEST(Mirror, IsAnInvolutionAndPreservesCharPoly) {
  for (const auto& n : curated_monodromy_names()) {
    const auto m = std::get<SurfaceMonodromy>(curated_payload(n));
    EXPECT_EQ(mirror(mirror(m)), m) << n;
    EXPECT_EQ(char_poly(mirror(m).homological_action()), char_poly(m.homological_action())) << n;
  }
}

TEST(BoundarySum, IsBlockDiagonal) {
  const auto t = std::get<SurfaceMonodromy>(curated_payload("trefoil_R"));
  const auto f = std::get<SurfaceMonodromy>(curated_payload("figure8"));
  const auto s = boundary_connected_sum(t, f);
  EXPECT_EQ(s.genus(), 2);
  EXPECT_EQ(s.homological_action(), IntMatrix::block_diagonal(t.homological_action(), f.homological_action()));
}

TEST(CgCompatibility, AcceptsHalfSpinBoundary) {
  for (const auto& n : curated_monodromy_names()) {
    const auto m = std::get<SurfaceMonodromy>(curated_payload(n));
    if (m.genus() == 0) continue;
    const auto s = transport(boundary_connected_sum(m, mirror(m)), half_spin_basis(m.genus()));
    const auto r = cg_compatibility(s.homological_action(), standard_lagrangian(s.genus()), m.homological_action());
    EXPECT_TRUE(r.ok()) << n << ": " << r.detail;
    const HandlebodyMonodromy h(*m.pi1_action(), s);
    EXPECT_EQ(h.pi1_quotient_compatible(), std::optional<bool>(true)) << n;
  }
}

TEST(CgCompatibility, RejectsBadInputs) {
  // not isotropic: a1 and b1 span
  const IntMatrix bad_l = IntMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}});
  EXPECT_FALSE(cg_compatibility(IntMatrix::identity(4), bad_l, IntMatrix::identity(2)).lagrangian);
  // not primitive
  EXPECT_FALSE(cg_compatibility(IntMatrix::identity(2), IntMatrix::from_rows({{0, 2}}), IntMatrix::identity(1)).lagrangian);
  // tau_a does not preserve span(b1)
  const auto r = cg_compatibility(transvection(std::vector<Int>{1, 0}), standard_lagrangian(1), IntMatrix::identity(1));
  EXPECT_TRUE(r.lagrangian);
  EXPECT_FALSE(r.preserved);
  // tau_b preserves it and acts trivially on the quotient
  EXPECT_TRUE(cg_compatibility(transvection(std::vector<Int>{0, 1}), standard_lagrangian(1), IntMatrix::identity(1)).ok());
  EXPECT_FALSE(cg_compatibility(transvection(std::vector<Int>{0, 1}), standard_lagrangian(1), IntMatrix::from_rows({{-1}})).quotient_matches);
}

TEST(HandlebodyMonodromy, RejectsIncompatibleBoundary) {
  const auto a = twist_monodromy(standard_curve(1, "a1"));
  EXPECT_THROW(HandlebodyMonodromy(FreeGroupMap::identity(1), a), InvariantViolation);
}

TEST(BasisChange, HalfSpinIsSymplecticAndConsistent) {
  for (int g = 1; g <= 3; ++g) {
    const BasisChange c = half_spin_basis(g);
    EXPECT_NO_THROW(c.validate());
    EXPECT_TRUE(is_symplectic(c.matrix));
    EXPECT_EQ(abelianize(c.pi1), c.matrix);
  }
}

TEST(StallingsCurves, ClassesAndFlags) {
  const auto c1 = std::get<CurveSpec>(curated_payload("square_knot_stallings_c1"));
  EXPECT_EQ(c1.homology_class, std::vector<Int>({1, 0, -1, 0}));
  EXPECT_TRUE(c1.flags.fiber_framing_zero);
  const auto e1 = std::get<CurveSpec>(curated_payload("halfspin_disk_c1"));
  EXPECT_TRUE(e1.flags.bounds_disk_in_handlebody);
  // class lies in span{b}
  for (int i = 0; i < 4; i += 2) EXPECT_EQ(e1.homology_class[static_cast<std::size_t>(i)], 0);
  EXPECT_EQ(transport(c1, half_spin_basis(1)).homology_class, e1.homology_class);
}

}  // namespace
}  // namespace fibcalc
