#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "superplactic/insertion.hpp"
#include "superplactic/plactic.hpp"
#include "superplactic/taquin.hpp"

using namespace superplactic;

namespace {

AlphabetPtr naturals(int n) { return numeric_alphabet(n, 0b01010101U & ((1U << n) - 1)); }

SkewTableau sample_skew() { return parse_tableau(". . 2 2\n. . 3\n. . 3\n1 2\n5\n", naturals(6)); }

const std::vector<Cell> sample_order = {{3, 2}, {3, 1}, {2, 2}, {1, 2}, {2, 1}, {1, 1}};

std::vector<SkewTableau> skew_tableaux(int max_size, int max_outer, const AlphabetPtr& a) {
  std::vector<SkewTableau> out;
  for (const auto& shape : oracle::proper_skew_shapes(max_size, max_outer)) {
    for (const auto& s : enumerate_tableaux(shape, a)) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(SlideStep, FirstStepOfTheSample) {
  auto board = SlideBoard::forward(sample_skew(), {3, 2});
  // south is 2 at (4,2), nothing east of (3,2)
  EXPECT_EQ(board.step(), SlideBoard::Move::vertical);
  EXPECT_EQ(board.hole(), (Cell{4, 2}));
  EXPECT_EQ(board.at({3, 2}), Letter{1});
  EXPECT_EQ(board.step(), SlideBoard::Move::done);
}

TEST(SlideStep, SingleNeighbourMoves) {
  auto a = numeric_alphabet(2);
  auto board = SlideBoard::forward(parse_tableau(".\n1\n", a), {1, 1});
  EXPECT_EQ(board.step(), SlideBoard::Move::vertical);
  EXPECT_EQ(board.step(), SlideBoard::Move::done);
  EXPECT_EQ(board.close_forward(), parse_tableau("1\n", a));
}

TEST(SlideStep, TiesFollowParity) {
  // equal neighbours: even moves up, odd moves left
  auto even = numeric_alphabet(1);
  auto e = SlideBoard::forward(parse_tableau(". 1\n1\n", numeric_alphabet(1, 0b1)), {1, 1});
  EXPECT_EQ(e.step(), SlideBoard::Move::horizontal);
  auto a = numeric_alphabet(2);
  auto v = SlideBoard::forward(parse_tableau(". 1\n1\n", a), {1, 1});
  EXPECT_EQ(v.step(), SlideBoard::Move::vertical);
  (void)even;
}

TEST(ForwardSlide, SampleSequence) {
  auto s = sample_skew();
  const std::vector<Cell> vacated = {{4, 2}, {5, 1}, {3, 3}, {2, 3}, {3, 2}, {2, 2}};
  for (std::size_t k = 0; k < sample_order.size(); ++k) {
    auto r = forward_slide(s, sample_order[k]);
    EXPECT_EQ(r.end, vacated[k]);
    EXPECT_EQ(r.path.front(), sample_order[k]);
    EXPECT_EQ(r.path.back(), vacated[k]);
    s = r.tableau;
  }
  EXPECT_EQ(s, parse_tableau("1 2 2 2\n3\n3\n5\n", naturals(6)));
}

TEST(ForwardSlide, FirstIntermediateTableau) {
  const auto r = forward_slide(sample_skew(), {3, 2});
  EXPECT_EQ(r.tableau, parse_tableau(". . 2 2\n. . 3\n. 2 3\n1\n5\n", naturals(6)));
}

TEST(ForwardSlide, CornerThatIsAlsoOuterExitsImmediately) {
  auto a = numeric_alphabet(2);
  const auto r = forward_slide(parse_tableau(". .\n1\n", a), {1, 2});
  EXPECT_EQ(r.end, (Cell{1, 2}));
  EXPECT_EQ(r.path.size(), 1U);
  EXPECT_EQ(r.tableau, parse_tableau(".\n1\n", a));
}

TEST(ForwardSlide, RejectsNonCorners) {
  EXPECT_THROW(forward_slide(sample_skew(), {1, 1}), PreconditionError);
  EXPECT_THROW(forward_slide(sample_skew(), {4, 1}), PreconditionError);
}

TEST(ReverseSlide, UndoesEachSampleSlide) {
  auto s = sample_skew();
  for (Cell c : sample_order) {
    const auto fwd = forward_slide(s, c);
    const auto back = reverse_slide(fwd.tableau, fwd.end);
    EXPECT_EQ(back.tableau, s);
    EXPECT_EQ(back.end, c);
    s = fwd.tableau;
  }
}

TEST(ReverseSlide, SingleCellTravelsToOrigin) {
  auto a = numeric_alphabet(2);
  const auto r = reverse_slide(parse_tableau("1\n", a), {1, 2});
  EXPECT_EQ(r.end, (Cell{1, 1}));
  EXPECT_EQ(r.tableau, parse_tableau(". 1\n", a));
  EXPECT_THROW(reverse_slide(parse_tableau("1\n", a), {2, 2}), PreconditionError);
}

TEST(ReverseSlide, RoundTripExhaustive) {
  for (unsigned mask = 0; mask < 4; ++mask) {
    auto a = numeric_alphabet(2, mask);
    for (const auto& s : skew_tableaux(4, 7, a)) {
      for (Cell c : inner_corners(s.shape())) {
        const auto fwd = forward_slide(s, c);
        const auto back = reverse_slide(fwd.tableau, fwd.end);
        EXPECT_EQ(back.tableau, s);
        EXPECT_EQ(back.end, c);
      }
    }
  }
}

TEST(Rectify, SampleInSixSlides) {
  const auto r = rectify_traced(sample_skew(), sequence_corner_policy(sample_order));
  EXPECT_EQ(r.slides.size(), 6U);
  EXPECT_EQ(r.tableau, parse_tableau("1 2 2 2\n3\n3\n5\n", naturals(6)));
  EXPECT_EQ(rectify(sample_skew()), r.tableau);
}

TEST(Rectify, StraightIsFixed) {
  auto a = numeric_alphabet(3, 0b010);
  for (const auto& t : oracle::tableaux_up_to(4, a)) {
    const auto r = rectify_traced(t);
    EXPECT_TRUE(r.slides.empty());
    EXPECT_EQ(r.tableau, t);
  }
}

TEST(Rectify, ConfluentUnderRandomCornerOrders) {
  std::mt19937 rng(3);
  auto a = numeric_alphabet(3, 0b101);
  for (const auto& s : skew_tableaux(4, 7, a)) {
    const auto expected = rectify(s);
    for (int k = 0; k < 5; ++k) EXPECT_EQ(rectify(s, random_corner_policy(rng)), expected);
  }
}

TEST(Rectify, IntermediateStatesAreTableaux) {
  auto a = numeric_alphabet(3, 0b011);
  for (const auto& s : skew_tableaux(4, 7, a)) {
    for (const auto& slide : rectify_traced(s).slides) {
      EXPECT_NO_THROW(SkewTableau::validate(slide.after.shape(), slide.after.rows(), a));
    }
  }
}

TEST(Rectify, PreservesCongruenceOfReadings) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 3; ++trial) {
    auto a = oracle::random_alphabet(3, rng);
    for (const auto& s : skew_tableaux(5, 7, a)) {
      const auto r = rectify(s);
      EXPECT_TRUE(equivalent(read_row(s), read_row(r)));
      EXPECT_TRUE(equivalent(read_col(s), read_row(s)));
      EXPECT_EQ(r, tableau_of_word(read_row(s)));
    }
  }
}

TEST(Rectify, DecidesCongruenceOfSkewReadings) {
  auto a = numeric_alphabet(2, 0b01);
  const auto all = skew_tableaux(3, 5, a);
  for (const auto& s : all) {
    for (const auto& u : all) {
      if (s.size() != u.size()) continue;
      EXPECT_EQ(rectify(s) == rectify(u), equivalent_bfs(read_row(s), read_row(u)));
    }
  }
}

TEST(Rectify, SequencePolicyValidatesCorners) {
  EXPECT_THROW(rectify(sample_skew(), sequence_corner_policy({{1, 1}})), PreconditionError);
  EXPECT_THROW(rectify(sample_skew(), sequence_corner_policy({{3, 2}})), PreconditionError);
}

TEST(Concat, ShapeAndReading) {
  auto a = naturals(6);
  const auto t = parse_tableau("1 2 2 3\n1 3 4\n3\n", a);
  const auto x = parse_tableau("2\n", a);
  const auto c = concat(t, x);
  EXPECT_EQ(format_skew_shape(c.shape()), "5,4,3,1/4");
  EXPECT_EQ(read_row(c), read_row(t) + read_row(x));
  EXPECT_EQ(rectify(c), parse_tableau("1 2 2 2\n1 3 4\n3\n3\n", a));
}

TEST(Concat, LetterOnTheLeft) {
  auto a = naturals(6);
  const auto c = concat(parse_tableau("1\n", a), parse_tableau("1 2 5 6\n1 4 5\n2\n", a));
  EXPECT_EQ(rectify(c), parse_tableau("1 2 2 5 6\n1 4 5\n1\n", a));
}

TEST(Concat, SingleCells) {
  auto a = numeric_alphabet(3, 0b010);
  for (Letter x : a->letters()) {
    for (Letter y : a->letters()) {
      const auto tx = tableau_of_word(Word(a, {x}));
      const auto ty = tableau_of_word(Word(a, {y}));
      const auto c = concat(tx, ty);
      EXPECT_EQ(c.size(), 2);
      EXPECT_EQ(rectify(c), tableau_of_word(Word(a, {x, y})));
    }
  }
}

TEST(Concat, IsAValidSkewTableau) {
  auto a = numeric_alphabet(2, 0b10);
  const auto all = skew_tableaux(2, 4, a);
  for (const auto& s : all) {
    for (const auto& u : all) {
      const auto c = concat(s, u);
      EXPECT_NO_THROW(SkewTableau::validate(c.shape(), c.rows(), a));
      EXPECT_EQ(read_row(c), read_row(s) + read_row(u));
    }
  }
}
