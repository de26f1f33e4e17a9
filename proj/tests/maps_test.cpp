#include "permsq/maps.hpp"

#include <gtest/gtest.h>

#include <set>

#include "permsq/enumerate.hpp"
#include "permsq/squares.hpp"

using namespace permsq;

namespace {

Permutation P(std::string_view text, int n) { return parse_cycles(text, n); }

}  // namespace

TEST(AddAndSwap, ReproducesWorkedExample) {
  const auto w = P("(1,2)(3,4,5,6)", 6);
  EXPECT_EQ(add_and_swap(w, 1), P("(7,2)(3,4,5,6)(1)", 7));
  EXPECT_EQ(add_and_swap(w, 2), P("(1,7)(3,4,5,6)(2)", 7));
  EXPECT_EQ(add_and_swap(w, 3), P("(1,2)(7,4,5,6)(3)", 7));
  EXPECT_EQ(add_and_swap(w, 4), P("(1,2)(3,7,5,6)(4)", 7));
  EXPECT_EQ(add_and_swap(w, 7), P("(1,2)(3,4,5,6)(7)", 7));
}

TEST(AddAndSwap, Preconditions) {
  EXPECT_THROW(add_and_swap(P("(1,2)", 3), 1), std::invalid_argument);
  EXPECT_THROW(add_and_swap(P("(1,2)", 2), 0), std::invalid_argument);
  EXPECT_THROW(add_and_swap(P("(1,2)", 2), 4), std::invalid_argument);
}

TEST(AddAndSwap, Inverse) {
  const auto w = P("(1,2)(3,4,5,6)", 6);
  auto back = add_and_swap_inverse(P("(7,2)(3,4,5,6)(1)", 7));
  EXPECT_EQ(back.w, w);
  EXPECT_EQ(back.i, 1);
  back = add_and_swap_inverse(P("(1,2)(3,4,5,6)(7)", 7));
  EXPECT_EQ(back.w, w);
  EXPECT_EQ(back.i, 7);
  EXPECT_THROW(add_and_swap_inverse(Permutation::identity(3)), std::invalid_argument);
  EXPECT_THROW(add_and_swap_inverse(P("(1,2,3)", 3)), std::invalid_argument);
}

// Images of one source are pairwise distinct, each has (i) as its only
// fixed point, and the inverse recovers (w, i); exhaustive for m <= 7.
TEST(AddAndSwapProperty, InjectiveWithUniqueFixedPoint) {
  for (int m = 2; m <= 7; ++m)
    for_each_permutation(m, [&](const Permutation& w) {
      if (cycle_type(w).count(1) != 0) return;
      std::set<Permutation> images;
      for (Point i = 1; i <= m + 1; ++i) {
        const auto v = add_and_swap(w, i);
        ASSERT_EQ(cycle_type(v).count(1), 1);
        ASSERT_EQ(v(i), i);
        const auto back = add_and_swap_inverse(v);
        ASSERT_EQ(back.w, w);
        ASSERT_EQ(back.i, i);
        images.insert(v);
      }
      ASSERT_EQ(images.size(), static_cast<std::size_t>(m + 1));
    });
}

TEST(SplitType3, WorkedExample) {
  const auto s = split_type3(P("(1,2)(3,4)(5,6,7)", 7));
  EXPECT_EQ(s.support.elements, (std::vector<Point>{5, 6, 7}));
  EXPECT_EQ(s.even_part, P("(1,2)(3,4)", 4));
  EXPECT_EQ(s.odd_part, P("(1,2,3)", 3));
}

TEST(SplitType3, SmallestMixedCaseAndErrors) {
  const auto s = split_type3(P("(1,2)(3)", 3));
  EXPECT_EQ(s.support.elements, (std::vector<Point>{3}));
  EXPECT_EQ(s.even_part, P("(1,2)", 2));
  EXPECT_TRUE(s.odd_part.is_identity());
  EXPECT_EQ(s.odd_part.size(), 1);
  EXPECT_THROW(split_type3(P("(1,2,3,4)", 4)), std::invalid_argument);
  EXPECT_THROW(split_type3(P("(1,2,3)", 3)), std::invalid_argument);
}

TEST(JoinType3, Examples) {
  EXPECT_EQ(join_type3(7, OddSupport{{5, 6, 7}}, P("(1,2)(3,4)", 4), P("(1,2,3)", 3)), P("(1,2)(3,4)(5,6,7)", 7));
  EXPECT_EQ(join_type3(5, OddSupport{{1, 2, 3}}, P("(1,2)", 2), Permutation::identity(3)), P("(4,5)", 5));
  EXPECT_EQ(join_type3(7, OddSupport{{2, 4, 5}}, P("(1,2)(3,4)", 4), P("(1,2,3)", 3)), P("(1,3)(2,4,5)(6,7)", 7));
}

TEST(JoinType3, Errors) {
  EXPECT_THROW(join_type3(5, OddSupport{{1, 2}}, P("(1,2)", 2), Permutation::identity(3)), std::invalid_argument);
  EXPECT_THROW(join_type3(6, OddSupport{{1, 2, 3}}, P("(1,2)", 2), Permutation::identity(3)), std::invalid_argument);
  EXPECT_THROW(join_type3(5, OddSupport{{1, 2, 3}}, Permutation::identity(2), Permutation::identity(3)),
               std::invalid_argument);
  EXPECT_THROW(join_type3(5, OddSupport{{1, 2, 3}}, P("(1,2)", 2), P("(1,2)", 3)), std::invalid_argument);
  EXPECT_THROW(join_type3(5, OddSupport{{3, 2, 1}}, P("(1,2)", 2), Permutation::identity(3)), std::invalid_argument);
}

// split and join are mutually inverse on every mixed permutation, and split
// carries perfect-square status to the even part; exhaustive for n <= 7.
TEST(SplitJoinProperty, MutuallyInverseAndPreserveSquares) {
  for (int n = 3; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& eta) {
      const auto t = cycle_type(eta);
      if (!t.has_even_cycle() || !t.has_odd_cycle()) return;
      const auto s = split_type3(eta);
      ASSERT_FALSE(cycle_type(s.even_part).has_odd_cycle());
      ASSERT_FALSE(cycle_type(s.odd_part).has_even_cycle());
      ASSERT_TRUE(is_perfect_square(s.odd_part));
      ASSERT_EQ(is_perfect_square(eta), is_perfect_square(s.even_part));
      const auto joined = join_type3(n, s.support, s.even_part, s.odd_part);
      ASSERT_EQ(joined, eta);
      const auto again = split_type3(joined);
      ASSERT_EQ(again.support, s.support);
      ASSERT_EQ(again.even_part, s.even_part);
      ASSERT_EQ(again.odd_part, s.odd_part);
    });
}

TEST(ParityToggle, BasicsAndErrors) {
  EXPECT_EQ(parity_toggle(Permutation::identity(2)), P("(1,2)", 2));
  EXPECT_THROW(parity_toggle(Permutation::identity(1)), std::invalid_argument);
}

TEST(ParityToggleProperty, InvolutionSwappingParity) {
  for (int n = 2; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      const auto t = parity_toggle(w);
      ASSERT_EQ(parity_toggle(t), w);
      ASSERT_NE(parity_class(t), parity_class(w));
    });
}

TEST(ParityToggleProperty, MapsEE4OntoOE4) {
  std::set<Permutation> ee_images, oe;
  for_each_permutation(4, [&](const Permutation& w) {
    if (parity_class(w) == Parity::EE)
      ee_images.insert(parity_toggle(w));
    else
      oe.insert(w);
  });
  EXPECT_EQ(ee_images.size(), 12u);
  EXPECT_EQ(ee_images, oe);
}

TEST(Relabel, OrderPreserving) {
  const Relabeling r({1, 2, 3}, {5, 6, 7});
  EXPECT_EQ(relabel(P("(1,2,3)", 3), r), P("(5,6,7)", 7));
  EXPECT_EQ(relabel(relabel(P("(1,3)", 3), r), r.inverse()), P("(1,3)", 3));
  EXPECT_EQ(relabel(P("(1,3)", 3), r, 9), P("(5,7)", 9));
  EXPECT_EQ(r(2), 6);
  EXPECT_THROW(r(4), std::out_of_range);
}

TEST(Relabel, Errors) {
  EXPECT_THROW(Relabeling({1, 2}, {3}), std::invalid_argument);
  EXPECT_THROW(Relabeling({2, 1}, {3, 4}), std::invalid_argument);
  const Relabeling r({1, 2}, {4, 5});
  EXPECT_THROW(relabel(P("(1,3)", 3), r), std::invalid_argument);
  EXPECT_THROW(relabel(P("(1,2)", 2), r, 4), std::invalid_argument);
}

TEST(RelabelProperty, PreservesCycleTypeAndRoundTrips) {
  const Relabeling r({1, 2, 3, 4, 5}, {2, 3, 5, 8, 9});
  for_each_permutation(5, [&](const Permutation& w) {
    const auto moved = relabel(w, r);
    ASSERT_EQ(moved.size(), 9);
    // Four extra fixed points appear on the larger ground set.
    auto t = cycle_type(w).multiplicities();
    t[1] += 4;
    ASSERT_EQ(cycle_type(moved), CycleType(9, t));
    ASSERT_EQ(relabel(moved, r.inverse(), 5), w);
  });
}
