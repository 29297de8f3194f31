#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace superplactic;

TEST(Oracles, AllWordsCount) {
  EXPECT_EQ(oracle::all_words(3, 0).size(), 1U);
  EXPECT_EQ(oracle::all_words(3, 4).size(), 81U);
  EXPECT_EQ(oracle::all_words(2, 3).front(), (std::vector<Letter>{Letter{0}, Letter{0}, Letter{0}}));
}

TEST(Oracles, SchenstedKnownCases) {
  EXPECT_EQ(oracle::schensted({2, 0, 1}), (oracle::Grid{{0, 1}, {2}}));
  EXPECT_EQ(oracle::schensted({0, 0, 1}), (oracle::Grid{{0, 0, 1}}));
  EXPECT_EQ(oracle::grid_shape(oracle::schensted({3, 2, 1, 0})), Partition({1, 1, 1, 1}));
}

TEST(Oracles, BruteGreeneLongestIncreasing) {
  auto weak = [](int p, int q) { return p <= q; };
  EXPECT_EQ(oracle::brute_greene({2, 0, 1, 1}, 1, weak), 3);
  EXPECT_EQ(oracle::brute_greene({2, 0, 1, 1}, 2, weak), 4);
  EXPECT_EQ(oracle::brute_greene({}, 1, weak), 0);
}

TEST(Oracles, LatticeLrKnownValues) {
  EXPECT_EQ(oracle::lattice_lr(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})), 2);
  EXPECT_EQ(oracle::lattice_lr(Partition({2, 1}), Partition({1}), Partition({2})), 1);
  EXPECT_EQ(oracle::lattice_lr(Partition({2}), Partition({1}), Partition({1})), 1);
  EXPECT_EQ(oracle::lattice_lr(Partition({2, 2}), Partition({1}), Partition({3})), 0);
}

TEST(Oracles, ProperSkewShapesHaveNonEmptyInner) {
  for (const auto& s : oracle::proper_skew_shapes(3, 6)) {
    EXPECT_FALSE(s.inner().empty());
    EXPECT_GE(s.size(), 1);
    EXPECT_LE(s.size(), 3);
  }
}
