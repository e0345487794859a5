#include <gtest/gtest.h>

#include <set>

#include "oracles.h"
#include "padya/permutations.h"

using namespace padya;

namespace {

std::vector<std::string> keys(std::initializer_list<const char*> ks) { return {ks.begin(), ks.end()}; }

}  // namespace

TEST(Permutations, IdentityFirst) {
  PermutationOrder order(keys({"a", "b", "c", "d"}));
  Arrangement a;
  ASSERT_TRUE(order.next(a));
  EXPECT_EQ(a, (Arrangement{0, 1, 2, 3}));
  EXPECT_EQ(order.current_swaps(), 0);
}

TEST(Permutations, EveryDistinctArrangementOnceByCayleyDistance) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::string> ks;
    for (std::size_t i = 0; i < n; ++i) ks.push_back(std::string(1, static_cast<char>('a' + i)));
    const auto all = first_arrangements(ks, static_cast<std::size_t>(-1));
    EXPECT_EQ(static_cast<double>(all.size()), PermutationOrder::total(ks));
    EXPECT_EQ(std::set<Arrangement>(all.begin(), all.end()).size(), all.size());
    for (std::size_t i = 1; i < all.size(); ++i) {
      const int d0 = padya::testing::cayley_distance(all[i - 1]);
      const int d1 = padya::testing::cayley_distance(all[i]);
      ASSERT_LE(d0, d1);
      if (d0 == d1) {
        ASSERT_LT(all[i - 1], all[i]);
      }
    }
  }
}

TEST(Permutations, RepeatedWordsDeduplicated) {
  const auto ks = keys({"ca", "x", "ca", "y"});
  const auto all = first_arrangements(ks, static_cast<std::size_t>(-1));
  EXPECT_EQ(all.size(), 12u);
  std::set<std::vector<std::string>> surfaces;
  for (const auto& a : all) {
    std::vector<std::string> s;
    for (auto i : a) s.push_back(ks[i]);
    surfaces.insert(s);
    // Among equal words the earliest index comes first.
    const auto p0 = std::find(a.begin(), a.end(), 0u);
    const auto p2 = std::find(a.begin(), a.end(), 2u);
    EXPECT_LT(p0, p2);
  }
  EXPECT_EQ(surfaces.size(), all.size());
}

TEST(Permutations, LimitIsRespectedAndIsAPrefix) {
  const auto ks = keys({"a", "b", "c", "d", "e", "f", "g"});
  const auto full = first_arrangements(ks, static_cast<std::size_t>(-1));
  for (std::size_t limit : {1u, 2u, 7u, 22u, 100u, 5039u}) {
    const auto part = first_arrangements(ks, limit);
    ASSERT_EQ(part.size(), limit);
    EXPECT_TRUE(std::equal(part.begin(), part.end(), full.begin()));
  }
}

TEST(Permutations, ZeroLimitProducesNothing) {
  PermutationOrder order(keys({"a", "b"}), 0);
  Arrangement a;
  EXPECT_FALSE(order.next(a));
}

TEST(Permutations, AllEqualWordsGiveOneArrangement) {
  EXPECT_EQ(first_arrangements(keys({"ca", "ca", "ca"}), 100).size(), 1u);
}
