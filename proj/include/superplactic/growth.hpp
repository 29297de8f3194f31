#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superplactic/errors.hpp"
#include "superplactic/taquin.hpp"

namespace superplactic {

/// Completes the square
///
///     mu  -- rho
///     |       |
///     nu  -- lam
///
/// where nu ⊂ mu ⊂ rho add one box each. The candidates are the partitions
/// between nu and rho of size |nu|+1: with one candidate lam = mu, with two
/// lam is the other one. The rule is symmetric in mu and lam.
inline Partition local_rule(const Partition& nu, const Partition& mu, const Partition& rho) {
  if (mu.size() != nu.size() + 1 || rho.size() != nu.size() + 2 || !contains(nu, mu) || !contains(mu, rho)) {
    throw PreconditionError("local rule needs nu ⊂ mu ⊂ rho one box apart, got " + format_partition(nu) + ", " +
                            format_partition(mu) + ", " + format_partition(rho));
  }
  std::vector<Partition> candidates;
  for (Cell c : addable_cells(nu)) {
    Partition p = add_box(nu, c.row);
    if (contains(p, rho)) candidates.push_back(std::move(p));
  }
  if (candidates.size() == 1) return mu;
  return candidates[0] == mu ? candidates[1] : candidates[0];
}

/// Rectangular array of partitions. Rows grow by one box per step from
/// left to right; columns lose one box per step from top to bottom.
class GrowthDiagram {
 public:
  explicit GrowthDiagram(std::vector<std::vector<Partition>> grid) : grid_(std::move(grid)) {}

  int rows() const { return static_cast<int>(grid_.size()); }
  int cols() const { return grid_.empty() ? 0 : static_cast<int>(grid_.front().size()); }
  const Partition& at(int r, int c) const { return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  const std::vector<std::vector<Partition>>& grid() const { return grid_; }

  Chain top_row() const { return Chain(grid_.front()); }
  Chain bottom_row() const { return Chain(grid_.back()); }
  /// Left column read bottom to top.
  Chain left_column() const { return column(0); }
  /// Right column read bottom to top.
  Chain right_column() const { return column(cols() - 1); }

  friend bool operator==(const GrowthDiagram&, const GrowthDiagram&) = default;

 private:
  Chain column(int c) const {
    std::vector<Partition> out;
    for (int r = rows() - 1; r >= 0; --r) out.push_back(at(r, c));
    return Chain(std::move(out));
  }

  std::vector<std::vector<Partition>> grid_;
};

/// Fills the diagram from its top row (the chain of a skew tableau, mu to
/// lam) and its left column (a chain from ∅ to mu, read bottom to top).
inline GrowthDiagram build_diagram(const Chain& top, const Chain& left) {
  if (left.back() != top.front()) throw PreconditionError("left column must end where the top row starts");
  if (!left.front().empty()) throw PreconditionError("left column must start at the empty partition");
  const int r_max = left.length();
  const int c_max = top.length();
  std::vector<std::vector<Partition>> grid(static_cast<std::size_t>(r_max + 1),
                                           std::vector<Partition>(static_cast<std::size_t>(c_max + 1)));
  for (int c = 0; c <= c_max; ++c) grid[0][static_cast<std::size_t>(c)] = top.partitions()[static_cast<std::size_t>(c)];
  for (int r = 0; r <= r_max; ++r) grid[static_cast<std::size_t>(r)][0] = left.partitions()[static_cast<std::size_t>(r_max - r)];
  for (int r = 1; r <= r_max; ++r) {
    for (int c = 1; c <= c_max; ++c) {
      auto& row = grid[static_cast<std::size_t>(r)];
      const auto& above = grid[static_cast<std::size_t>(r - 1)];
      row[static_cast<std::size_t>(c)] =
          local_rule(row[static_cast<std::size_t>(c - 1)], above[static_cast<std::size_t>(c - 1)], above[static_cast<std::size_t>(c)]);
    }
  }
  return GrowthDiagram(std::move(grid));
}

/// Recovers the whole diagram from its bottom row (∅ to nu) and right column
/// (nu to lam, read bottom to top).
inline GrowthDiagram reconstruct(const Chain& bottom, const Chain& right) {
  if (bottom.back() != right.front()) throw PreconditionError("right column must start where the bottom row ends");
  if (!bottom.front().empty()) throw PreconditionError("bottom row must start at the empty partition");
  const int r_max = right.length();
  const int c_max = bottom.length();
  std::vector<std::vector<Partition>> grid(static_cast<std::size_t>(r_max + 1),
                                           std::vector<Partition>(static_cast<std::size_t>(c_max + 1)));
  for (int c = 0; c <= c_max; ++c) grid[static_cast<std::size_t>(r_max)][static_cast<std::size_t>(c)] = bottom.partitions()[static_cast<std::size_t>(c)];
  for (int r = 0; r <= r_max; ++r) {
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c_max)] = right.partitions()[static_cast<std::size_t>(r_max - r)];
  }
  for (int r = r_max; r >= 1; --r) {
    for (int c = c_max; c >= 1; --c) {
      const auto& below = grid[static_cast<std::size_t>(r)];
      auto& above = grid[static_cast<std::size_t>(r - 1)];
      above[static_cast<std::size_t>(c - 1)] =
          local_rule(below[static_cast<std::size_t>(c - 1)], below[static_cast<std::size_t>(c)], above[static_cast<std::size_t>(c)]);
    }
  }
  return GrowthDiagram(std::move(grid));
}

/// The diagram of the pair (R, S): top row the chain of S, left column the
/// chain of R.
inline GrowthDiagram growth_diagram(const Tableau& r, const SkewTableau& s) {
  return build_diagram(standardization_chain(s), standardization_chain(r));
}

inline std::string format_diagram(const GrowthDiagram& d) {
  std::string out;
  for (const auto& row : d.grid()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += " | ";
      out += format_partition(row[c]);
    }
    out += '\n';
  }
  return out;
}

struct GrowthPair {
  Tableau rectified;
  /// Skew recording tableau; filled from the alphabet of R.
  SkewTableau recording;
};

/// Grw(R, S) = (Rec(S), R'). Slides S at the cells of R in reverse
/// standardization order (for a standard R: largest label first); R' holds,
/// at each vacated box, the entry of R whose cell launched that slide.
inline GrowthPair grw(const Tableau& r, const SkewTableau& s) {
  if (!r.is_straight()) throw PreconditionError("recording tableau must have straight shape");
  if (r.shape().outer() != s.shape().inner()) {
    throw PreconditionError("recording tableau shape " + format_partition(r.shape().outer()) +
                            " differs from the inner shape " + format_partition(s.shape().inner()));
  }
  const auto order = standardization_order(r);
  const Partition outer = s.shape().outer();
  SkewTableau current = s;
  std::vector<std::pair<Cell, Letter>> vacated;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto slide = forward_slide(current, *it);
    vacated.emplace_back(slide.end, r.at(*it));
    current = std::move(slide.tableau);
  }
  const SkewShape rec_shape(outer, current.shape().outer());
  std::vector<std::vector<Letter>> rows(static_cast<std::size_t>(rec_shape.rows()));
  for (int i = 1; i <= rec_shape.rows(); ++i) rows[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(rec_shape.row_size(i)));
  for (auto [cell, x] : vacated) {
    rows[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - rec_shape.inner().part(cell.row) - 1)] = x;
  }
  try {
    return {std::move(current), SkewTableau::validate(rec_shape, std::move(rows), r.alphabet())};
  } catch (const TableauViolation& e) {
    throw InvariantViolation(std::string("recording tableau is not a tableau: ") + e.what());
  }
}

/// Inverse of grw: reverse slides t at the cells of Rp in standardization
/// order and records which inner box each slide creates.
inline std::pair<Tableau, SkewTableau> grw_inverse(const Tableau& t, const SkewTableau& rp) {
  if (!t.is_straight()) throw PreconditionError("grw_inverse needs a straight tableau");
  if (rp.shape().inner() != t.shape().outer()) {
    throw PreconditionError("recording tableau inner shape " + format_partition(rp.shape().inner()) +
                            " differs from the tableau shape " + format_partition(t.shape().outer()));
  }
  SkewTableau current = t;
  std::vector<std::pair<Cell, Letter>> created;
  for (Cell c : standardization_order(rp)) {
    auto slide = reverse_slide(current, c);
    created.emplace_back(slide.end, rp.at(c));
    current = std::move(slide.tableau);
  }
  const Partition inner = current.shape().inner();
  std::vector<std::vector<Letter>> rows(static_cast<std::size_t>(inner.length()));
  for (int i = 1; i <= inner.length(); ++i) rows[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(inner.part(i)));
  for (auto [cell, x] : created) rows[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)] = x;
  try {
    return {SkewTableau::validate(SkewShape(inner), std::move(rows), rp.alphabet()), std::move(current)};
  } catch (const TableauViolation& e) {
    throw InvariantViolation(std::string("recovered recording tableau is not a tableau: ") + e.what());
  }
}

inline constexpr int dual_equivalence_max_inner = 6;

/// Whether S and U have the same shape and every standard recording
/// tableau of the inner shape produces the same R' for both.
inline bool dual_equivalent(const SkewTableau& s, const SkewTableau& u) {
  if (s.shape() != u.shape()) throw PreconditionError("dual equivalence needs equal shapes");
  if (s.shape().inner().size() > dual_equivalence_max_inner) {
    throw ResourceError("inner shape larger than " + std::to_string(dual_equivalence_max_inner) + " boxes");
  }
  for (const auto& r : standard_tableaux(s.shape().inner())) {
    if (grw(r, s).recording != grw(r, u).recording) return false;
  }
  return true;
}

/// The skew tableau of the same shape as S that is dual equivalent to S and
/// rectifies to tp.
inline SkewTableau psi(const SkewTableau& s, const Tableau& tp) {
  if (!tp.is_straight()) throw PreconditionError("target must be a straight tableau");
  if (!same_alphabet(s.alphabet(), tp.alphabet())) throw PreconditionError("operands use different alphabets");
  const auto labels = row_standard_tableau(s.shape().inner());
  auto [t, s1] = grw(labels, s);
  if (t.shape() != tp.shape()) {
    throw PreconditionError("target shape " + format_skew_shape(tp.shape()) + " differs from the rectified shape " +
                            format_skew_shape(t.shape()));
  }
  return grw(tp, s1).recording;
}

}  // namespace superplactic
