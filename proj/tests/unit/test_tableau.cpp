#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "superplactic/tableau.hpp"

using namespace superplactic;

namespace {

AlphabetPtr sigma5() { return parse_alphabet("1 0\n2 0\n3 1\n4 0\n5 1"); }

Tableau sample(const AlphabetPtr& a) { return tableau_from_symbols(a, {{"1", "1", "2"}, {"3", "4", "4"}, {"5"}, {"5"}}); }

TableauViolation::Rule violation(const std::function<void()>& f) {
  try {
    f();
  } catch (const TableauViolation& e) {
    return e.rule();
  }
  ADD_FAILURE() << "no violation";
  return TableauViolation::Rule::letter;
}

}  // namespace

TEST(Validate, AcceptsSignedRepeats) {
  const auto t = sample(sigma5());
  EXPECT_EQ(t.shape().outer(), Partition({3, 3, 1, 1}));
}

TEST(Validate, RejectsOddRepeatInRow) {
  auto a = numeric_alphabet(3, 0b100);
  EXPECT_EQ(violation([&] { tableau_from_symbols(a, {{"3", "3"}}); }), TableauViolation::Rule::row);
}

TEST(Validate, RejectsEvenRepeatInColumn) {
  auto a = numeric_alphabet(1);
  EXPECT_EQ(violation([&] { tableau_from_symbols(a, {{"1"}, {"1"}}); }), TableauViolation::Rule::column);
}

TEST(Validate, ReportsCellAndLengthMismatch) {
  auto a = numeric_alphabet(3);
  try {
    tableau_from_symbols(a, {{"1", "2"}, {"3", "1"}});
    FAIL();
  } catch (const TableauViolation& e) {
    EXPECT_EQ(e.cell(), (Cell{1, 2}));
    EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos);
  }
  EXPECT_EQ(violation([&] {
              SkewTableau::validate(SkewShape(Partition({2})), {{Letter{0}}}, a);
            }),
            TableauViolation::Rule::length);
}

TEST(Reading, RowAndColumnWords) {
  auto a = sigma5();
  const auto t = sample(a);
  EXPECT_EQ(format_word(read_row(t)), "5 5 3 4 4 1 1 2");
  EXPECT_EQ(format_word(read_col(t)), "5 5 3 1 4 1 4 2");
  EXPECT_TRUE(read_row(Tableau(a)).empty());
  EXPECT_TRUE(read_col(Tableau(a)).empty());
  EXPECT_EQ(format_word(read_row(tableau_from_symbols(a, {{"1", "2", "2"}}))), "1 2 2");
  EXPECT_EQ(format_word(read_col(tableau_from_symbols(a, {{"1"}, {"3"}}))), "3 1");
}

TEST(Reading, SkewReadingSkipsInnerCells) {
  auto a = numeric_alphabet(6, 0b010101);
  const auto s = parse_tableau(". . 2 2\n. . 3\n. . 3\n1 2\n5\n", a);
  EXPECT_EQ(format_word(read_row(s)), "5 1 2 3 3 2 2");
  EXPECT_EQ(format_word(read_col(s)), "5 1 2 3 3 2 2");
}

TEST(Reading, SameLengthAndDegree) {
  auto a = numeric_alphabet(3, 0b110);
  for (const auto& shape : oracle::proper_skew_shapes(4, 6)) {
    for_each_tableau(shape, a, [&](const SkewTableau& s) {
      EXPECT_EQ(read_row(s).size(), read_col(s).size());
      EXPECT_EQ(degree(read_row(s)), degree(read_col(s)));
    });
  }
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(count_tableaux(SkewShape(Partition({1})), numeric_alphabet(4)), 4);
  auto a = numeric_alphabet(2, 0b10);  // 1 even, 2 odd
  const auto row = enumerate_tableaux(SkewShape(Partition({2})), a);
  ASSERT_EQ(row.size(), 2U);
  EXPECT_EQ(format_tableau(row[0]), "1 1\n");
  EXPECT_EQ(format_tableau(row[1]), "1 2\n");
  const auto col = enumerate_tableaux(SkewShape(Partition({1, 1})), a);
  ASSERT_EQ(col.size(), 2U);
  EXPECT_EQ(format_tableau(col[0]), "1\n2\n");
  EXPECT_EQ(format_tableau(col[1]), "2\n2\n");
}

TEST(Enumerate, MatchesNaiveFilter) {
  for (unsigned mask = 0; mask < 8; ++mask) {
    for (int n = 1; n <= 3; ++n) {
      auto a = numeric_alphabet(n, mask & ((1U << n) - 1));
      for (int size = 0; size <= 4; ++size) {
        for (const auto& lam : partitions_of(size)) {
          for (const auto& mu : subpartitions(lam)) {
            const SkewShape shape(lam, mu);
            EXPECT_EQ(enumerate_tableaux(shape, a), oracle::naive_tableaux(shape, a)) << format_skew_shape(shape);
          }
        }
      }
    }
  }
}

TEST(Enumerate, ClassicalWhenAllEven) {
  // all-even alphabet: weak rows, strict columns; count SSYT(2,1) over 3 letters = 8
  auto a = numeric_alphabet(3);
  EXPECT_EQ(count_tableaux(SkewShape(Partition({2, 1})), a), 8);
  for (const auto& t : enumerate_tableaux(SkewShape(Partition({2, 2})), a)) {
    EXPECT_LE(t.at({1, 1}), t.at({1, 2}));
    EXPECT_LT(t.at({1, 1}), t.at({2, 1}));
  }
  // all-odd alphabet: the transpose
  EXPECT_EQ(count_tableaux(SkewShape(Partition({2, 1})), numeric_alphabet(3, 0b111)), 8);
  EXPECT_EQ(count_tableaux(SkewShape(Partition({3})), numeric_alphabet(3, 0b111)),
            count_tableaux(SkewShape(Partition({1, 1, 1})), a));
}

TEST(StandardizationChain, SampleTableau) {
  const auto chain = standardization_chain(sample(sigma5()));
  EXPECT_EQ(chain.length(), 8);
  EXPECT_EQ(chain.back(), Partition({3, 3, 1, 1}));
  EXPECT_EQ(chain.added_cells().front(), (Cell{1, 1}));
  // equal odd entries: top to bottom
  EXPECT_EQ(chain.added_cells(), (std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {4, 1}}));
}

TEST(StandardizationChain, SingleCell) {
  const auto chain = standardization_chain(tableau_from_symbols(numeric_alphabet(1), {{"1"}}));
  EXPECT_EQ(chain.partitions(), (std::vector<Partition>{Partition{}, Partition({1})}));
}

TEST(StandardizationChain, SkewExampleGivesTopRowOfDiagram) {
  auto a = numeric_alphabet(6, 0b010101);
  const auto s = parse_tableau(". . 2 2\n. . 3\n. . 3\n1 2\n5\n", a);
  const auto chain = standardization_chain(s);
  const std::vector<Partition> expected = {{2, 2, 2},    {2, 2, 2, 1},    {2, 2, 2, 2},   {3, 2, 2, 2},
                                           {4, 2, 2, 2}, {4, 3, 2, 2}, {4, 3, 3, 2}, {4, 3, 3, 2, 1}};
  EXPECT_EQ(chain.partitions(), expected);
  EXPECT_EQ(chain.length(), 7);
}

TEST(StandardizationChain, OddTiesGoDownTheStrip) {
  // 3 is odd: the vertical strip of 3s is added top to bottom even across columns
  auto a = numeric_alphabet(3, 0b100);
  const auto s = parse_tableau(". 3\n3\n", a);
  EXPECT_EQ(standardization_chain(s).added_cells(), (std::vector<Cell>{{1, 2}, {2, 1}}));
  const auto t = parse_tableau(". 2\n2\n", a);
  EXPECT_EQ(standardization_chain(t).added_cells(), (std::vector<Cell>{{2, 1}, {1, 2}}));
}

TEST(StandardizationChain, PrefixesArePartitionsForAllSmallTableaux) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    auto a = oracle::random_alphabet(3, rng);
    for (int n = 0; n <= 6; ++n) {
      for (const auto& lam : partitions_of(n)) {
        for (const auto& mu : subpartitions(lam)) {
          for_each_tableau(SkewShape(lam, mu), a, [&](const SkewTableau& s) {
            const auto chain = standardization_chain(s);  // Chain validates each step
            EXPECT_EQ(chain.length(), s.size());
            EXPECT_EQ(chain.front(), mu);
            EXPECT_EQ(chain.back(), lam);
          });
        }
      }
    }
  }
}

TEST(Chain, RejectsBadSteps) {
  EXPECT_THROW(Chain({Partition{}, Partition({2})}), InputError);
  EXPECT_THROW(Chain({Partition({1}), Partition({1})}), InputError);
  EXPECT_THROW(Chain(std::vector<Partition>{}), InputError);
}

TEST(StandardTableaux, CountsAreHookLengthNumbers) {
  EXPECT_EQ(standard_tableaux(Partition({2, 1})).size(), 2U);
  EXPECT_EQ(standard_tableaux(Partition({3, 2})).size(), 5U);
  EXPECT_EQ(standard_tableaux(Partition({2, 2, 2})).size(), 5U);
  EXPECT_EQ(standard_tableaux(Partition({3, 2, 1})).size(), 16U);
  EXPECT_EQ(standard_tableaux(Partition{}).size(), 1U);
  for (const auto& t : standard_tableaux(Partition({3, 2, 1}))) {
    EXPECT_TRUE(is_standard(t));
    EXPECT_NO_THROW(SkewTableau::validate(t.shape(), t.rows(), t.alphabet()));
  }
}

TEST(Tbl, ParseFormatRoundTrip) {
  auto a = numeric_alphabet(3, 0b010);
  for (const auto& shape : oracle::proper_skew_shapes(5, 7)) {
    for_each_tableau(shape, a, [&](const SkewTableau& s) { EXPECT_EQ(parse_tableau(format_tableau(s), a), s); });
  }
  EXPECT_EQ(format_tableau(Tableau(a)), "-\n");
  EXPECT_EQ(parse_tableau("-\n", a), Tableau(a));
  EXPECT_EQ(parse_tableau("# nothing\n\n", a), Tableau(a));
}

TEST(Tbl, ErrorsNameLineAndCell) {
  auto a = numeric_alphabet(3);
  auto message = [&](const std::string& text) {
    try {
      parse_tableau(text, a, "t.tbl");
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("1 2\n# c\n1\n").find("t.tbl:1: column violation at (1,1)"), std::string::npos);
  EXPECT_NE(message(". .\n\n. .\n2 1\n").find("t.tbl:4: row violation at (3,1)"), std::string::npos);
  EXPECT_NE(message("1 9\n").find("t.tbl:1: unknown letter '9'"), std::string::npos);
  EXPECT_NE(message("1\n1 2\n").find("t.tbl:2: row is longer"), std::string::npos);
  EXPECT_NE(message("1 .\n").find("t.tbl:1: inner-shape cell"), std::string::npos);
  EXPECT_NE(message(". 1 1\n. . 2\n").find("t.tbl:2: inner shape"), std::string::npos);
  EXPECT_NE(message("2 1\n").find("row violation at (1,1)"), std::string::npos);
}
