#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superplactic/errors.hpp"
#include "superplactic/shapes.hpp"
#include "superplactic/signed_alphabet.hpp"

namespace superplactic {

/// A filling that breaks the row or column condition, or has the wrong
/// number of entries in a row.
class TableauViolation : public InputError {
 public:
  enum class Rule { length, row, column, letter };

  TableauViolation(Rule rule, Cell cell, const std::string& what) : InputError(what), rule_(rule), cell_(cell) {}

  Rule rule() const { return rule_; }
  Cell cell() const { return cell_; }

 private:
  Rule rule_;
  Cell cell_;
};

/// Super semistandard skew tableau. A straight tableau is the case with an
/// empty inner shape.
///
/// Row i (1-based) stores the entries of columns inner_i+1 .. outer_i, so
/// cell lookup is O(1). Values are immutable once built.
class SkewTableau {
 public:
  SkewTableau() = default;
  explicit SkewTableau(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  /// Checks both tableau conditions and returns the tableau.
  static SkewTableau validate(SkewShape shape, std::vector<std::vector<Letter>> rows, AlphabetPtr alphabet) {
    if (!alphabet) throw PreconditionError("tableau without alphabet");
    if (static_cast<int>(rows.size()) != shape.rows()) {
      throw TableauViolation(TableauViolation::Rule::length, Cell{static_cast<int>(rows.size()), 0},
                             "expected " + std::to_string(shape.rows()) + " rows, got " + std::to_string(rows.size()));
    }
    for (int i = 1; i <= shape.rows(); ++i) {
      const auto& row = rows[static_cast<std::size_t>(i - 1)];
      if (static_cast<int>(row.size()) != shape.row_size(i)) {
        throw TableauViolation(TableauViolation::Rule::length, Cell{i, shape.inner().part(i) + 1},
                               "row " + std::to_string(i) + " has " + std::to_string(row.size()) + " entries, shape needs " +
                                   std::to_string(shape.row_size(i)));
      }
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (!alphabet->contains(row[k])) {
          throw TableauViolation(TableauViolation::Rule::letter, Cell{i, shape.inner().part(i) + 1 + static_cast<int>(k)},
                                 "letter outside alphabet");
        }
      }
    }
    SkewTableau t(std::move(alphabet), std::move(shape), std::move(rows));
    t.check_conditions();
    return t;
  }

  /// Builds without checking the tableau conditions. For algorithms whose
  /// output is valid by construction.
  static SkewTableau trusted(SkewShape shape, std::vector<std::vector<Letter>> rows, AlphabetPtr alphabet) {
    return SkewTableau(std::move(alphabet), std::move(shape), std::move(rows));
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const SkewShape& shape() const { return shape_; }
  /// Number of filled cells.
  int size() const { return shape_.size(); }
  bool empty() const { return shape_.size() == 0; }
  bool is_straight() const { return shape_.is_straight(); }

  /// Filled entries of a 1-based row, left to right.
  const std::vector<Letter>& row(int r) const { return rows_[static_cast<std::size_t>(r - 1)]; }
  const std::vector<std::vector<Letter>>& rows() const { return rows_; }

  Letter at(Cell c) const {
    return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - shape_.inner().part(c.row) - 1)];
  }

  /// Same filling read over another alphabet of the same size.
  SkewTableau with_alphabet(AlphabetPtr alphabet) const { return SkewTableau(std::move(alphabet), shape_, rows_); }

  friend bool operator==(const SkewTableau& a, const SkewTableau& b) {
    return a.shape_ == b.shape_ && a.rows_ == b.rows_ && same_alphabet(a.alphabet_, b.alphabet_);
  }

  /// Canonical order (shape, then row-major ranks); ignores the alphabet.
  friend bool operator<(const SkewTableau& a, const SkewTableau& b) {
    if (a.shape_ != b.shape_) return a.shape_ < b.shape_;
    return a.rows_ < b.rows_;
  }

 private:
  SkewTableau(AlphabetPtr alphabet, SkewShape shape, std::vector<std::vector<Letter>> rows)
      : alphabet_(std::move(alphabet)), shape_(std::move(shape)), rows_(std::move(rows)) {}

  void check_conditions() const {
    const auto& a = *alphabet_;
    for (int i = 1; i <= shape_.rows(); ++i) {
      for (int j = shape_.inner().part(i) + 1; j <= shape_.outer().part(i); ++j) {
        const Cell here{i, j};
        const Cell east{i, j + 1};
        const Cell south{i + 1, j};
        if (shape_.contains_cell(east) && !row_compatible(a, at(here), at(east))) {
          throw TableauViolation(TableauViolation::Rule::row, here,
                                 "row violation at " + format_cell(here) + ": " + a.symbol(at(here)) + " before " +
                                     a.symbol(at(east)) + (at(here) == at(east) ? " (repeated odd letter in a row)" : ""));
        }
        if (shape_.contains_cell(south) && !column_compatible(a, at(here), at(south))) {
          throw TableauViolation(TableauViolation::Rule::column, here,
                                 "column violation at " + format_cell(here) + ": " + a.symbol(at(here)) + " above " +
                                     a.symbol(at(south)) +
                                     (at(here) == at(south) ? " (repeated even letter in a column)" : ""));
        }
      }
    }
  }

  AlphabetPtr alphabet_;
  SkewShape shape_;
  std::vector<std::vector<Letter>> rows_;
};

using Tableau = SkewTableau;

/// Builds a straight tableau from rows of symbols, e.g. {{"1","1","2"},{"3"}}.
inline Tableau tableau_from_symbols(const AlphabetPtr& alphabet, const std::vector<std::vector<std::string>>& rows,
                                    const Partition& inner = {}) {
  std::vector<int> outer;
  std::vector<std::vector<Letter>> letters;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    outer.push_back(inner.part(static_cast<int>(i) + 1) + static_cast<int>(rows[i].size()));
    letters.emplace_back();
    for (const auto& s : rows[i]) letters.back().push_back(alphabet->letter(s));
  }
  return SkewTableau::validate(SkewShape(Partition(outer), inner), std::move(letters), alphabet);
}

/// Rows from bottom to top, each left to right.
inline Word read_row(const SkewTableau& s) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for (int i = s.shape().rows(); i >= 1; --i) {
    const auto& row = s.row(i);
    out.insert(out.end(), row.begin(), row.end());
  }
  return Word(s.alphabet(), std::move(out));
}

/// Columns from left to right, each bottom to top.
inline Word read_col(const SkewTableau& s) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  const auto& shape = s.shape();
  for (int j = 1; j <= shape.outer().part(1); ++j) {
    for (int i = shape.rows(); i >= 1; --i) {
      if (shape.contains_cell({i, j})) out.push_back(s.at({i, j}));
    }
  }
  return Word(s.alphabet(), std::move(out));
}

/// Visits every tableau of the given shape, in lexicographic order of the
/// row-major rank sequence. Partial fillings are pruned as soon as a row or
/// column condition fails.
inline void for_each_tableau(const SkewShape& shape, const AlphabetPtr& alphabet,
                             const std::function<void(const SkewTableau&)>& visit) {
  const auto& a = *alphabet;
  const auto cells = shape.cells();
  std::vector<std::vector<Letter>> rows(static_cast<std::size_t>(shape.rows()));
  for (int i = 1; i <= shape.rows(); ++i) rows[static_cast<std::size_t>(i - 1)].reserve(static_cast<std::size_t>(shape.row_size(i)));

  auto entry = [&](Cell c) { return rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - shape.inner().part(c.row) - 1)]; };

  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == cells.size()) {
      visit(SkewTableau::trusted(shape, rows, alphabet));
      return;
    }
    const Cell c = cells[k];
    const Cell west{c.row, c.col - 1};
    const Cell north{c.row - 1, c.col};
    const bool has_west = shape.contains_cell(west);
    const bool has_north = shape.contains_cell(north);
    auto& row = rows[static_cast<std::size_t>(c.row - 1)];
    for (int r = has_west ? entry(west).rank : 0; r < a.size(); ++r) {
      const Letter x{r};
      if (has_west && !row_compatible(a, entry(west), x)) continue;
      if (has_north && !column_compatible(a, entry(north), x)) continue;
      row.push_back(x);
      self(self, k + 1);
      row.pop_back();
    }
  };
  rec(rec, 0);
}

inline std::vector<SkewTableau> enumerate_tableaux(const SkewShape& shape, const AlphabetPtr& alphabet) {
  std::vector<SkewTableau> out;
  for_each_tableau(shape, alphabet, [&](const SkewTableau& t) { out.push_back(t); });
  return out;
}

inline long long count_tableaux(const SkewShape& shape, const AlphabetPtr& alphabet) {
  long long n = 0;
  for_each_tableau(shape, alphabet, [&](const SkewTableau&) { ++n; });
  return n;
}

/// Increasing chain of partitions, one box per step.
class Chain {
 public:
  Chain() : steps_{Partition{}} {}
  explicit Chain(std::vector<Partition> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw InputError("a chain needs at least one partition");
    for (std::size_t k = 1; k < steps_.size(); ++k) {
      if (steps_[k].size() != steps_[k - 1].size() + 1 || !contains(steps_[k - 1], steps_[k])) {
        throw InputError("chain step " + std::to_string(k) + " does not add exactly one box");
      }
    }
  }

  /// Chain from `start` adding the given cells in order.
  static Chain from_cells(const Partition& start, std::span<const Cell> cells) {
    std::vector<Partition> steps{start};
    for (Cell c : cells) {
      const auto& last = steps.back();
      if (!last.addable(c.row) || last.part(c.row) + 1 != c.col) {
        throw InvariantViolation("cell " + format_cell(c) + " cannot be added to " + format_partition(last));
      }
      steps.push_back(add_box(last, c.row));
    }
    return Chain(std::move(steps));
  }

  const std::vector<Partition>& partitions() const { return steps_; }
  const Partition& front() const { return steps_.front(); }
  const Partition& back() const { return steps_.back(); }
  /// Number of boxes added.
  int length() const { return static_cast<int>(steps_.size()) - 1; }

  std::vector<Cell> added_cells() const {
    std::vector<Cell> out;
    for (std::size_t k = 1; k < steps_.size(); ++k) {
      for (int i = 1; i <= steps_[k].length(); ++i) {
        if (steps_[k].part(i) != steps_[k - 1].part(i)) {
          out.push_back({i, steps_[k].part(i)});
          break;
        }
      }
    }
    return out;
  }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<Partition> steps_;
};

/// Cells of S in standardization order: increasing entries; equal even
/// entries (a horizontal strip) left to right; equal odd entries (a vertical
/// strip) top to bottom.
inline std::vector<Cell> standardization_order(const SkewTableau& s) {
  auto cells = s.shape().cells();
  const auto& a = *s.alphabet();
  std::stable_sort(cells.begin(), cells.end(), [&](Cell p, Cell q) {
    const Letter x = s.at(p);
    const Letter y = s.at(q);
    if (x != y) return x < y;
    if (a.is_even(x)) return p.col < q.col || (p.col == q.col && p.row < q.row);
    return p.row < q.row || (p.row == q.row && p.col < q.col);
  });
  return cells;
}

/// Chain from the inner to the outer shape adding cells in standardization
/// order.
inline Chain standardization_chain(const SkewTableau& s) {
  const auto order = standardization_order(s);
  return Chain::from_cells(s.shape().inner(), order);
}

/// Alphabet of labels 1 < 2 < ... < m, all even. Standard tableaux live here.
inline AlphabetPtr label_alphabet(int m) { return numeric_alphabet(m); }

/// Standard skew tableau whose k-th added cell carries label k.
inline SkewTableau standard_tableau(const Chain& chain, AlphabetPtr labels = nullptr) {
  if (!labels) labels = label_alphabet(chain.length());
  const SkewShape shape(chain.back(), chain.front());
  std::vector<std::vector<Letter>> rows(static_cast<std::size_t>(shape.rows()));
  for (int i = 1; i <= shape.rows(); ++i) rows[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(shape.row_size(i)));
  const auto cells = chain.added_cells();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell c = cells[k];
    rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - shape.inner().part(c.row) - 1)] =
        Letter{static_cast<int>(k)};
  }
  return SkewTableau::trusted(shape, std::move(rows), std::move(labels));
}

inline bool is_standard(const SkewTableau& s) {
  std::vector<Letter> entries = read_row(s).letters();
  std::sort(entries.begin(), entries.end());
  return std::adjacent_find(entries.begin(), entries.end()) == entries.end();
}

/// All standard tableaux of straight shape p over label_alphabet(|p|).
inline std::vector<Tableau> standard_tableaux(const Partition& p) {
  std::vector<Tableau> out;
  const auto labels = label_alphabet(p.size());
  std::vector<Partition> steps{p};
  auto rec = [&](auto& self) -> void {
    const Partition current = steps.back();
    if (current.empty()) {
      std::vector<Partition> forward(steps.rbegin(), steps.rend());
      out.push_back(standard_tableau(Chain(std::move(forward)), labels));
      return;
    }
    for (Cell c : removable_cells(current)) {
      steps.push_back(remove_box(current, c.row));
      self(self);
      steps.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

/// Standard tableau numbering the cells of p row by row.
inline Tableau row_standard_tableau(const Partition& p) {
  std::vector<Cell> cells = SkewShape(p).cells();
  return standard_tableau(Chain::from_cells(Partition{}, cells));
}

/// TBL text: one row per line, whitespace-separated symbols, `.` for cells of
/// the inner shape; `-` alone denotes the empty tableau.
inline std::string format_tableau(const SkewTableau& s) {
  if (s.shape().rows() == 0) return "-\n";
  std::string out;
  for (int i = 1; i <= s.shape().rows(); ++i) {
    bool first = true;
    auto put = [&](const std::string& token) {
      if (!first) out += ' ';
      out += token;
      first = false;
    };
    for (int j = 1; j <= s.shape().inner().part(i); ++j) put(".");
    for (Letter x : s.row(i)) put(s.alphabet()->symbol(x));
    out += '\n';
  }
  return out;
}

inline SkewTableau parse_tableau(std::string_view text, const AlphabetPtr& alphabet, std::string_view source = "tbl") {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::vector<int> line_of_row;
  std::vector<int> outer;
  std::vector<int> inner;
  std::vector<std::vector<Letter>> rows;
  bool saw_empty_marker = false;
  auto fail = [&](int at, const std::string& what) {
    throw InputError(std::string(source) + ":" + std::to_string(at) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string token;
    while (fields >> token) tokens.push_back(token);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() == 1 && tokens.front() == "-") {
      if (!rows.empty() || saw_empty_marker) fail(line_no, "'-' must be the only row");
      saw_empty_marker = true;
      continue;
    }
    if (saw_empty_marker) fail(line_no, "'-' must be the only row");
    int dots = 0;
    std::vector<Letter> row;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      if (tokens[k] == ".") {
        if (!row.empty()) fail(line_no, "inner-shape cell '.' after a filled cell");
        ++dots;
        continue;
      }
      auto x = alphabet->find(tokens[k]);
      if (!x) fail(line_no, "unknown letter '" + tokens[k] + "' at column " + std::to_string(k + 1));
      row.push_back(*x);
    }
    line_of_row.push_back(line_no);
    inner.push_back(dots);
    outer.push_back(static_cast<int>(tokens.size()));
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 1; i < outer.size(); ++i) {
    if (outer[i] > outer[i - 1]) fail(line_of_row[i], "row is longer than the row above it");
    if (inner[i] > inner[i - 1]) fail(line_of_row[i], "inner shape is not a partition");
  }
  try {
    return SkewTableau::validate(SkewShape(Partition(outer), Partition(inner)), std::move(rows), alphabet);
  } catch (const TableauViolation& e) {
    const int row = std::clamp(e.cell().row, 1, std::max<int>(1, static_cast<int>(line_of_row.size())));
    const int at = line_of_row.empty() ? 1 : line_of_row[static_cast<std::size_t>(row - 1)];
    fail(at, e.what());
  }
  return SkewTableau(alphabet);  // unreachable
}

}  // namespace superplactic
