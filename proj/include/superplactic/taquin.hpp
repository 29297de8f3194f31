#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "superplactic/errors.hpp"
#include "superplactic/tableau.hpp"

namespace superplactic {

/// A skew tableau with one empty box, the hole, somewhere in its frame.
///
/// The grid covers the outer shape (plus the hole when it sits outside
/// it); cells of the inner shape and the hole hold no letter.
class SlideBoard {
 public:
  enum class Move { vertical, horizontal, done };

  /// Hole at an inner corner, ready for forward sliding.
  static SlideBoard forward(const SkewTableau& s, Cell corner) {
    const auto& inner = s.shape().inner();
    if (!inner.contains_cell(corner) || !inner.removable(corner.row) || inner.part(corner.row) != corner.col) {
      throw PreconditionError(format_cell(corner) + " is not an inner corner of " + format_skew_shape(s.shape()));
    }
    return SlideBoard(s, corner, s.shape().outer(), remove_box(inner, corner.row));
  }

  /// Hole at an addable cell of the outer shape, ready for reverse sliding.
  static SlideBoard reverse(const SkewTableau& s, Cell outer_cell) {
    const auto& outer = s.shape().outer();
    if (!outer.addable(outer_cell.row) || outer.part(outer_cell.row) + 1 != outer_cell.col) {
      throw PreconditionError(format_cell(outer_cell) + " cannot be added to the outer shape " + format_partition(outer));
    }
    return SlideBoard(s, outer_cell, add_box(outer, outer_cell.row), s.shape().inner());
  }

  Cell hole() const { return hole_; }
  const std::vector<Cell>& path() const { return path_; }

  /// One forward step: the smaller neighbour to the south or east moves into
  /// the hole. On a tie the south entry moves up when even, the east entry
  /// moves left when odd.
  Move step() {
    const auto south = filled({hole_.row + 1, hole_.col});
    const auto east = filled({hole_.row, hole_.col + 1});
    if (!south && !east) return Move::done;
    const bool vertical = south && (!east || *south < *east || (*south == *east && alphabet_->is_even(*south)));
    return move_from(vertical ? Cell{hole_.row + 1, hole_.col} : Cell{hole_.row, hole_.col + 1},
                     vertical ? Move::vertical : Move::horizontal);
  }

  /// One reverse step: the larger neighbour to the north or west moves into
  /// the hole. On a tie the north entry moves down when even.
  Move step_back() {
    const auto north = filled({hole_.row - 1, hole_.col});
    const auto west = filled({hole_.row, hole_.col - 1});
    if (!north && !west) return Move::done;
    const bool vertical = north && (!west || *west < *north || (*west == *north && alphabet_->is_even(*north)));
    return move_from(vertical ? Cell{hole_.row - 1, hole_.col} : Cell{hole_.row, hole_.col - 1},
                     vertical ? Move::vertical : Move::horizontal);
  }

  /// After forward sliding: the hole is an outer corner and leaves the frame.
  SkewTableau close_forward() const { return to_tableau(remove_box(outer_, hole_.row), inner_); }

  /// After reverse sliding: the hole joins the inner shape.
  SkewTableau close_reverse() const { return to_tableau(outer_, add_box(inner_, hole_.row)); }

  /// Letter at a filled box; empty for the hole, inner cells and cells
  /// outside the frame.
  std::optional<Letter> at(Cell c) const { return filled(c); }

 private:
  SlideBoard(const SkewTableau& s, Cell hole, Partition outer, Partition inner)
      : alphabet_(s.alphabet()), outer_(std::move(outer)), inner_(std::move(inner)), hole_(hole), path_{hole} {
    grid_.resize(static_cast<std::size_t>(outer_.length()));
    for (int i = 1; i <= outer_.length(); ++i) {
      auto& row = grid_[static_cast<std::size_t>(i - 1)];
      row.assign(static_cast<std::size_t>(outer_.part(i)), -1);
      for (int j = 1; j <= outer_.part(i); ++j) {
        if (s.shape().contains_cell({i, j})) row[static_cast<std::size_t>(j - 1)] = s.at({i, j}).rank;
      }
    }
  }

  std::optional<Letter> filled(Cell c) const {
    if (c.row < 1 || c.col < 1 || c.row > outer_.length() || c.col > outer_.part(c.row)) return std::nullopt;
    const int v = grid_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
    if (v < 0) return std::nullopt;
    return Letter{v};
  }

  Move move_from(Cell from, Move kind) {
    auto& src = grid_[static_cast<std::size_t>(from.row - 1)][static_cast<std::size_t>(from.col - 1)];
    grid_[static_cast<std::size_t>(hole_.row - 1)][static_cast<std::size_t>(hole_.col - 1)] = src;
    src = -1;
    hole_ = from;
    path_.push_back(from);
    return kind;
  }

  SkewTableau to_tableau(Partition outer, Partition inner) const {
    SkewShape shape(std::move(outer), std::move(inner));
    std::vector<std::vector<Letter>> rows(static_cast<std::size_t>(shape.rows()));
    for (int i = 1; i <= shape.rows(); ++i) {
      for (int j = shape.inner().part(i) + 1; j <= shape.outer().part(i); ++j) {
        const int v = grid_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        if (v < 0) throw InvariantViolation("empty box " + format_cell({i, j}) + " left after sliding");
        rows[static_cast<std::size_t>(i - 1)].push_back(Letter{v});
      }
    }
    return SkewTableau::trusted(std::move(shape), std::move(rows), alphabet_);
  }

  AlphabetPtr alphabet_;
  Partition outer_;
  Partition inner_;  // without the hole
  Cell hole_;
  std::vector<Cell> path_;
  std::vector<std::vector<int>> grid_;
};

struct SlideResult {
  SkewTableau tableau;
  Cell start;
  /// Vacated outer corner (forward) or created inner cell (reverse).
  Cell end;
  /// Hole positions from start to end.
  std::vector<Cell> path;
};

inline SlideResult forward_slide(const SkewTableau& s, Cell corner) {
  auto board = SlideBoard::forward(s, corner);
  while (board.step() != SlideBoard::Move::done) {
  }
  return {board.close_forward(), corner, board.hole(), board.path()};
}

inline SlideResult reverse_slide(const SkewTableau& s, Cell outer_cell) {
  auto board = SlideBoard::reverse(s, outer_cell);
  while (board.step_back() != SlideBoard::Move::done) {
  }
  return {board.close_reverse(), outer_cell, board.hole(), board.path()};
}

/// Chooses the next inner corner to slide from, given the current tableau
/// and its inner corners (sorted by row).
using CornerPolicy = std::function<Cell(const SkewTableau&, const std::vector<Cell>&)>;

/// Bottom-most inner corner. Since inner corners sit in distinct rows and
/// columns this is also the rightmost among the lowest.
inline CornerPolicy bottom_corner_policy() {
  return [](const SkewTableau&, const std::vector<Cell>& corners) { return corners.back(); };
}

inline CornerPolicy random_corner_policy(std::mt19937& rng) {
  return [&rng](const SkewTableau&, const std::vector<Cell>& corners) {
    std::uniform_int_distribution<std::size_t> pick(0, corners.size() - 1);
    return corners[pick(rng)];
  };
}

/// Uses the given corners in order; each must be an inner corner when its
/// turn comes.
inline CornerPolicy sequence_corner_policy(std::vector<Cell> order) {
  auto next = std::make_shared<std::size_t>(0);
  return [order = std::move(order), next](const SkewTableau& s, const std::vector<Cell>& corners) {
    if (*next >= order.size()) throw PreconditionError("corner sequence exhausted before rectification finished");
    const Cell c = order[(*next)++];
    if (std::find(corners.begin(), corners.end(), c) == corners.end()) {
      throw PreconditionError(format_cell(c) + " is not an inner corner of " + format_skew_shape(s.shape()));
    }
    return c;
  };
}

struct SlideRecord {
  Cell corner;
  std::vector<Cell> path;
  Cell vacated;
  /// The skew tableau after this slide.
  SkewTableau after;
};

struct Rectification {
  Tableau tableau;
  std::vector<SlideRecord> slides;
};

inline Rectification rectify_traced(const SkewTableau& s, const CornerPolicy& policy = bottom_corner_policy()) {
  Rectification out{s, {}};
  while (!out.tableau.is_straight()) {
    const auto corners = inner_corners(out.tableau.shape());
    const Cell corner = policy(out.tableau, corners);
    auto slide = forward_slide(out.tableau, corner);
    out.slides.push_back({corner, std::move(slide.path), slide.end, slide.tableau});
    out.tableau = std::move(slide.tableau);
  }
  return out;
}

/// Rec(S).
inline Tableau rectify(const SkewTableau& s, const CornerPolicy& policy = bottom_corner_policy()) {
  return rectify_traced(s, policy).tableau;
}

/// [S, U]: U shifted right past the first row of S and placed above it, so
/// read_row([S, U]) = read_row(S) read_row(U).
inline SkewTableau concat(const SkewTableau& s, const SkewTableau& u) {
  if (!same_alphabet(s.alphabet(), u.alphabet())) throw PreconditionError("operands use different alphabets");
  const int width = s.shape().outer().part(1);
  const auto& su = u.shape();
  std::vector<int> outer;
  std::vector<int> inner;
  std::vector<std::vector<Letter>> rows;
  for (int i = 1; i <= su.rows(); ++i) {
    outer.push_back(su.outer().part(i) + width);
    inner.push_back(su.inner().part(i) + width);
    rows.push_back(u.row(i));
  }
  for (int i = 1; i <= s.shape().rows(); ++i) {
    outer.push_back(s.shape().outer().part(i));
    inner.push_back(s.shape().inner().part(i));
    rows.push_back(s.row(i));
  }
  return SkewTableau::trusted(SkewShape(Partition(std::move(outer)), Partition(std::move(inner))), std::move(rows),
                              s.alphabet());
}

}  // namespace superplactic
