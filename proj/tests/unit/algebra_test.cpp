#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <numeric>

#include "fibcalc/algebra/free_group.hpp"
#include "fibcalc/algebra/laurent.hpp"
#include "support.hpp"

namespace fibcalc {
namespace {

using testing::naive_reduce;
using testing::random_letters;
using testing::random_matrix;
using testing::random_word;

TEST(FreeWord, ReducesOnConstruction) {
  const FreeWord w(3, {1, 2, -2, -1, 3});
  EXPECT_EQ(w.letters(), std::vector<int>({3}));
  EXPECT_TRUE(FreeWord(2, {1, -1, 2, -2}).empty());
}

TEST(FreeWord, RejectsBadLetters) {
  EXPECT_THROW(FreeWord(2, {0}), MalformedInput);
  EXPECT_THROW(FreeWord(2, {3}), MalformedInput);
}

TEST(FreeWord, ReductionMatchesNaiveOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto letters = random_letters(rng, 3, 30);
    const FreeWord w(3, std::span<const int>(letters));
    EXPECT_EQ(w.letters(), naive_reduce(letters));
    // idempotent
    EXPECT_EQ(FreeWord(3, std::span<const int>(w.letters())), w);
  }
}

TEST(FreeWord, GroupLaws) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const FreeWord u = random_word(rng, 3, 12), v = random_word(rng, 3, 12), w = random_word(rng, 3, 12);
    EXPECT_EQ((u * v) * w, u * (v * w));
    EXPECT_TRUE((u * u.inverse()).empty());
    EXPECT_EQ((u * v).inverse(), v.inverse() * u.inverse());
    EXPECT_EQ(u.pow(3), u * u * u);
    EXPECT_EQ(u.pow(-2), u.inverse() * u.inverse());
  }
}

TEST(FreeGroupMap, AbelianizeIsHomomorphism) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FreeWord> fi, gi;
    for (int i = 0; i < 3; ++i) {
      fi.push_back(random_word(rng, 3, 6));
      gi.push_back(random_word(rng, 3, 6));
    }
    const FreeGroupMap f(fi), g(gi);
    EXPECT_EQ(abelianize(compose(f, g)), abelianize(f) * abelianize(g));
    const FreeWord w = random_word(rng, 3, 10);
    const auto sums = w.exponent_sums();
    const auto image_sums = f.apply(w).exponent_sums();
    const auto predicted = abelianize(f) * sums;
    EXPECT_EQ(image_sums, predicted);
  }
}

TEST(FreeGroupMap, InverseWitnessIsChecked) {
  const FreeWord a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
  EXPECT_NO_THROW(FreeGroupMap({a, b * a}, std::vector<FreeWord>{a, b * a.inverse()}));
  EXPECT_THROW(FreeGroupMap({a, b * a}, std::vector<FreeWord>{a, b * a}), InvariantViolation);
}

TEST(WordText, RoundTrips) {
  const auto names = surface_generator_names(2);
  const FreeWord w = parse_word("a1 B2 b1 A1", names);
  EXPECT_EQ(w, FreeWord(4, {1, -4, 2, -1}));
  EXPECT_EQ(format_word(w, names), "a1 B2 b1 A1");
  EXPECT_THROW(parse_word("a3", names), MalformedInput);
}

TEST(Checked, OverflowThrows) {
  const Int big = std::numeric_limits<Int>::max();
  EXPECT_THROW(checked::add(big, 1), OverflowError);
  EXPECT_THROW(checked::mul(big, 2), OverflowError);
  EXPECT_EQ(checked::gcd(-12, 18), 6);
}

void expect_smith_contract(const IntMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  EXPECT_EQ(f.u * a * f.v, f.d);
  EXPECT_EQ(std::abs(f.u.determinant()), 1);
  EXPECT_EQ(std::abs(f.v.determinant()), 1);
  for (int i = 0; i < f.d.rows(); ++i)
    for (int j = 0; j < f.d.cols(); ++j)
      if (i != j) EXPECT_EQ(f.d(i, j), 0);
  const auto diag = f.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    EXPECT_GE(diag[i], 0);
    if (i + 1 < diag.size() && diag[i] != 0) EXPECT_EQ(diag[i + 1] % diag[i], 0);
    if (i + 1 < diag.size() && diag[i] == 0) EXPECT_EQ(diag[i + 1], 0);
  }
  if (a.rows() == a.cols()) {
    Int prod = 1;
    for (Int d : diag) prod *= d;
    EXPECT_EQ(prod, std::abs(a.determinant()));
  }
}

TEST(Smith, ContractOnRandomSquareMatrices) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 100; ++trial) expect_smith_contract(random_matrix(rng, 5, 5, 6));
}

TEST(Smith, ContractOnRectangularAndDegenerate) {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    expect_smith_contract(random_matrix(rng, 3, 5, 4));
    expect_smith_contract(random_matrix(rng, 5, 2, 4));
  }
  expect_smith_contract(IntMatrix(3, 3));
  expect_smith_contract(IntMatrix::from_rows({{2, 4}, {4, 8}}));
}

TEST(Smith, KnownDiagonals) {
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})).diagonal(), std::vector<Int>({1, 6}));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).diagonal(),
            std::vector<Int>({2, 6, 12}));
}

TEST(IntMatrix, RaggedRowsRejected) { EXPECT_THROW(IntMatrix::from_rows({{1, 2}, {3}}), MalformedInput); }

TEST(IntMatrix, UnimodularInverse) {
  const IntMatrix a = IntMatrix::from_rows({{2, 1}, {1, 1}});
  EXPECT_TRUE((a * a.unimodular_inverse()).is_identity());
  EXPECT_THROW(IntMatrix::from_rows({{2, 0}, {0, 1}}).unimodular_inverse(), PreconditionError);
  EXPECT_EQ(a.pow(-2) * a.pow(2), IntMatrix::identity(2));
}

LaurentPoly poly(std::initializer_list<Int> coeffs, Int low = 0) {
  LaurentPoly p;
  Int e = low;
  for (Int c : coeffs) p += LaurentPoly::monomial(c, e++);
  return p;
}

TEST(Laurent, Arithmetic) {
  const LaurentPoly a = poly({1, -1, 1});
  EXPECT_EQ(a * a, poly({1, -2, 3, -2, 1}));
  EXPECT_EQ(exact_divide(a * poly({2, 1}), a), poly({2, 1}));
  EXPECT_THROW(exact_divide(a, poly({2, 1})), PreconditionError);
  EXPECT_EQ(a.evaluate_at_one(), 1);
  EXPECT_EQ(normalize_alexander(poly({-1, 1, -1}, -3)), a);
  EXPECT_TRUE(equal_up_to_units(a, poly({-1, 1, -1}, 5)));
}

TEST(Laurent, GcdOfProducts) {
  const LaurentPoly a = poly({1, -1, 1}), b = poly({1, -3, 1}), c = poly({1, 1});
  EXPECT_EQ(gcd(a * c, b * c), c);
  EXPECT_EQ(gcd(a * b, a * c), a);
  EXPECT_EQ(gcd(a, b), poly({1}));
  EXPECT_EQ(gcd(LaurentPoly(), a), a);
}

LaurentPoly leibniz(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    LaurentPoly term = LaurentPoly::monomial(inversions % 2 ? -1 : 1, 0);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(Laurent, DeterminantMatchesLeibniz) {
  std::mt19937 rng(16);
  std::uniform_int_distribution<Int> c(-3, 3), e(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    LaurentMatrix m(n, std::vector<LaurentPoly>(n));
    for (auto& row : m)
      for (auto& x : row) x = LaurentPoly::monomial(c(rng), e(rng)) + LaurentPoly::monomial(c(rng), e(rng));
    EXPECT_EQ(determinant(m), leibniz(m));
  }
}

TEST(Laurent, CharPolyOfTrefoilMatrix) {
  const IntMatrix a = IntMatrix::from_rows({{0, -1}, {1, 1}});
  EXPECT_EQ(char_poly(a).dense_coefficients(), testing::char_poly_2x2(a));
  EXPECT_EQ(char_poly(a), poly({1, -1, 1}));
}

}  // namespace
}  // namespace fibcalc
