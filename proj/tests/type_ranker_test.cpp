#include "permsq/type_ranker.hpp"

#include <gtest/gtest.h>

#include <set>

#include "permsq/census.hpp"
#include "permsq/enumerate.hpp"

using namespace permsq;

namespace {

Permutation P(std::string_view text, int n) { return parse_cycles(text, n); }

}  // namespace

TEST(TypeRanker, RoundTripEveryTypeUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions(n)) {
      const TypeRanker r(lambda);
      EXPECT_EQ(r.size(), class_size(lambda));
      std::set<Permutation> seen;
      for (Count k = 0; k < r.size(); ++k) {
        const auto w = r.unrank(k);
        EXPECT_EQ(partition_of(cycle_type(w)).parts, lambda.parts);
        EXPECT_EQ(r.rank(w), k);
        EXPECT_TRUE(seen.insert(w).second);
      }
    }
}

TEST(TypeRanker, SmallOrders) {
  const TypeRanker two_two(Partition::from_parts({2, 2}));
  ASSERT_EQ(two_two.size(), 3);
  std::set<Permutation> got;
  for (int k = 0; k < 3; ++k) got.insert(two_two.unrank(k));
  EXPECT_EQ(got, (std::set<Permutation>{P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4), P("(1,4)(2,3)", 4)}));

  const TypeRanker three(Partition::from_parts({3}));
  EXPECT_EQ(three.unrank(0), P("(1,2,3)", 3));
  EXPECT_EQ(three.unrank(1), P("(1,3,2)", 3));
}

TEST(TypeRanker, Errors) {
  const TypeRanker r(Partition::from_parts({2, 1}));
  EXPECT_THROW(r.unrank(3), std::out_of_range);
  EXPECT_THROW(r.unrank(-1), std::out_of_range);
  EXPECT_THROW(r.rank(P("(1,2,3)", 3)), std::invalid_argument);
  EXPECT_THROW(r.rank(P("(1,2)", 4)), std::invalid_argument);
}

TEST(TypeRanker, LargeTypeRoundTrip) {
  const TypeRanker r(Partition::from_parts({6, 6, 4, 4, 3, 3, 1, 1}));
  for (const Count& k : std::vector<Count>{Count(0), Count(r.size() / 3), Count(r.size() - 1)}) EXPECT_EQ(r.rank(r.unrank(k)), k);
}

TEST(ClassIndex, CoversClassExactly) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& label : all_labels())
      for (bool ps : {false, true}) {
        if (ps && label.parity == Parity::OE) continue;
        const ClassSelector sel{label, ps};
        const ClassIndex idx(n, sel);
        EXPECT_EQ(idx.size(), census(n).count(sel));
        for (Count k = 0; k < idx.size(); ++k) {
          const auto w = idx.unrank(k);
          EXPECT_TRUE(sel.matches(cycle_type(w)));
          EXPECT_EQ(idx.rank(w), k);
        }
      }
}

TEST(CanonicalPair, BijectiveOnSmallClasses) {
  for (const char* name : {"EE1", "EE2", "EE3", "PS1", "PS2", "PS3", "OE1", "OE2", "OE3"}) {
    const auto sel = parse_selector(name);
    for (int m : {2, 4}) {
      const ClassIndex small(m, sel);
      const ClassIndex big(m + 1, sel);
      ASSERT_EQ(big.size(), small.size() * (m + 1));
      std::set<Permutation> images;
      for (Count k = 0; k < small.size(); ++k) {
        const auto w = small.unrank(k);
        for (Point i = 1; i <= m + 1; ++i) {
          const auto v = canonical_pair(sel, w, i);
          EXPECT_TRUE(sel.matches(cycle_type(v)));
          images.insert(v);
          const auto back = canonical_unpair(sel, v);
          EXPECT_EQ(back.w, w);
          EXPECT_EQ(back.i, i);
        }
      }
      EXPECT_EQ(Count(images.size()), big.size()) << name << " m=" << m;
    }
  }
}

TEST(CanonicalPair, Errors) {
  const auto sel = parse_selector("EE2");
  EXPECT_THROW(canonical_pair(sel, P("(1,2)", 2), 1), std::invalid_argument);
  EXPECT_THROW(canonical_pair(sel, P("", 2), 4), std::invalid_argument);
  EXPECT_THROW(canonical_unpair(sel, P("(1,2)", 3)), std::invalid_argument);
}
