#pragma once

#include <utility>
#include <vector>

#include "superplactic/errors.hpp"
#include "superplactic/insertion.hpp"
#include "superplactic/taquin.hpp"

namespace superplactic {

/// t^op over the opposite alphabet. Each round removes the top-left entry x,
/// slides the hole out and writes x* into the output at the vacated box.
/// `opposite_alphabet` defaults to opposite(*t.alphabet()).
inline Tableau evacuate(const Tableau& t, AlphabetPtr opposite_alphabet = nullptr) {
  if (!t.is_straight()) throw PreconditionError("evacuation needs a straight tableau");
  if (!opposite_alphabet) opposite_alphabet = opposite(*t.alphabet());
  if (opposite_alphabet->size() != t.alphabet()->size()) throw PreconditionError("opposite alphabet has the wrong size");
  const auto& a = *t.alphabet();
  const SkewShape frame = t.shape();
  std::vector<std::vector<Letter>> out(static_cast<std::size_t>(frame.rows()));
  for (int i = 1; i <= frame.rows(); ++i) out[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(frame.row_size(i)));

  Tableau current = t;
  while (!current.empty()) {
    const Letter x = current.at({1, 1});
    auto rows = current.rows();
    rows.front().erase(rows.front().begin());
    auto punctured = SkewTableau::trusted(SkewShape(current.shape().outer(), Partition{1}), std::move(rows), t.alphabet());
    auto slide = forward_slide(punctured, {1, 1});
    out[static_cast<std::size_t>(slide.end.row - 1)][static_cast<std::size_t>(slide.end.col - 1)] = a.star(x);
    current = std::move(slide.tableau);
  }
  return SkewTableau::validate(frame, std::move(out), std::move(opposite_alphabet));
}

/// t^∧ = C((read_row t)*) over the opposite alphabet.
inline Tableau opposite_via_congruence(const Tableau& t, AlphabetPtr opposite_alphabet = nullptr) {
  if (!t.is_straight()) throw PreconditionError("t^∧ needs a straight tableau");
  if (!opposite_alphabet) opposite_alphabet = opposite(*t.alphabet());
  return tableau_of_word(star_word(read_row(t), std::move(opposite_alphabet)));
}

/// Checks x_k ← (… ← (x_1 ← t)) = (((t^op → x_1*) → …) → x_k*)^op.
inline bool duality_check(const Tableau& t, const std::vector<Letter>& xs) {
  const auto& a = *t.alphabet();
  const auto opp = opposite(a);
  Tableau left = t;
  for (Letter x : xs) left = insert_left(x, left);
  Tableau right = evacuate(t, opp);
  for (Letter x : xs) right = insert_right(right, a.star(x));
  return evacuate(right, t.alphabet()) == left;
}

}  // namespace superplactic
