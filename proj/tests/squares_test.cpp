#include "permsq/squares.hpp"

#include <gtest/gtest.h>

#include "permsq/classify.hpp"
#include "permsq/enumerate.hpp"

using namespace permsq;

namespace {

Permutation P(std::string_view text, int n) { return parse_cycles(text, n); }

/// Every u in S_n with u * u == w, by enumeration.
std::vector<Permutation> brute_roots(const Permutation& w) {
  std::vector<Permutation> roots;
  for_each_permutation(w.size(), [&](const Permutation& u) {
    if (square(u) == w) roots.push_back(u);
  });
  return roots;
}

}  // namespace

TEST(PerfectSquare, WorkedExamples) {
  EXPECT_TRUE(is_perfect_square(P("(1,2)(3,4)(5)(6)(7)(8)", 8)));
  EXPECT_FALSE(is_perfect_square(P("(1,2)(3,4,9,10)(5)(6)(7)(8)", 10)));
  EXPECT_TRUE(is_perfect_square(P("(1,2)(3,4)(5,6,7,8)(9,10,11,12)(13)", 13)));
  EXPECT_FALSE(is_perfect_square(P("(1,2,3,4,5,6)(7,8)(9)", 9)));
}

TEST(PerfectSquare, OddLengthsNeverObstruct) {
  EXPECT_TRUE(is_perfect_square(CycleType(9, {{3, 1}, {5, 1}, {1, 1}})));
  EXPECT_TRUE(is_perfect_square(CycleType(6, {{3, 2}})));
  EXPECT_FALSE(is_perfect_square(CycleType(6, {{2, 3}})));
  EXPECT_FALSE(is_perfect_square(CycleType(8, {{2, 2}, {4, 1}})));
  EXPECT_TRUE(is_perfect_square(CycleType(12, {{2, 2}, {4, 2}})));
}

TEST(SquareRoot, ConstructsCanonicalRoots) {
  const auto root = square_root(P("(1,2)(3,4)", 4));
  ASSERT_TRUE(root);
  EXPECT_EQ(format_cycles(*root), "(1,3,2,4)");
  const auto all = brute_roots(P("(1,2)(3,4)", 4));
  EXPECT_NE(std::find(all.begin(), all.end(), *root), all.end());

  const auto r3 = square_root(P("(1,2,3)", 3));
  ASSERT_TRUE(r3);
  EXPECT_EQ(format_cycles(*r3), "(1,3,2)");
  EXPECT_EQ(square(*r3), P("(1,2,3)", 3));

  EXPECT_FALSE(square_root(P("(1,2)", 2)));
  EXPECT_FALSE(square_root(P("(1,2,3,4,5,6)(7,8)(9)", 9)));
}

TEST(SquareRoot, PairsEqualLengthEvenCyclesByMinimum) {
  // Four 2-cycles: pairs are {(1,5),(2,6)} and {(3,7),(4,8)} by minimum.
  const auto w = P("(1,5)(2,6)(3,7)(4,8)", 8);
  const auto root = square_root(w);
  ASSERT_TRUE(root);
  EXPECT_EQ(format_cycles(*root), "(1,2,5,6)(3,4,7,8)");
  EXPECT_EQ(square(*root), w);
}

TEST(CyclePower, MatchesRepeatedComposition) {
  EXPECT_EQ(format_cycles(cycle_power(Cycle({1, 2, 3}), 2, 3)), "(1,3,2)");
  const Cycle five({1, 2, 3, 4, 5});
  const auto cube = cycle_power(five, 3, 5);
  EXPECT_EQ(square(cube), P("(1,2,3,4,5)", 5));
  const auto c = Cycle({2, 4, 3});
  EXPECT_EQ(cycle_power(c, 1, 6), P("(2,4,3)", 6));
  auto acc = Permutation::identity(7);
  const auto base = P("(1,4,6,2,7)", 7);
  for (int k = 1; k <= 12; ++k) {
    acc = compose(base, acc);
    EXPECT_EQ(cycle_power(Cycle({1, 4, 6, 2, 7}), k, 7), acc) << "k = " << k;
  }
  EXPECT_THROW(cycle_power(c, 0, 6), std::invalid_argument);
}

TEST(SquareRootProperty, SoundExhaustivelyUpToEight) {
  for (int n = 1; n <= 8; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      const auto root = square_root(w);
      ASSERT_EQ(root.has_value(), is_perfect_square(w)) << format_cycles(w);
      if (root) ASSERT_EQ(square(*root), w) << format_cycles(w);
      ASSERT_EQ(square_root(w), root);  // deterministic
    });
}

TEST(PerfectSquareProperty, CriterionMatchesSquaresSetUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    const GroupTable table(n);
    for (std::uint64_t r = 0; r < table.size(); ++r)
      ASSERT_EQ(table.is_square(r), is_perfect_square(lex_unrank(n, r))) << "n = " << n << " rank " << r;
  }
}

TEST(PerfectSquareProperty, SquaresAreEE) {
  for (int n = 1; n <= 8; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      const auto t = cycle_type(w);
      if (is_perfect_square(t)) ASSERT_EQ(t.even_cycle_count() % 2, 0);
    });
}
