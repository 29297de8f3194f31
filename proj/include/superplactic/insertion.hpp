#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "superplactic/errors.hpp"
#include "superplactic/tableau.hpp"

namespace superplactic {

namespace detail {

inline Tableau straight_from_rows(std::vector<std::vector<Letter>> rows, const AlphabetPtr& alphabet) {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return SkewTableau::trusted(SkewShape(Partition(std::move(parts))), std::move(rows), alphabet);
}

inline void require_straight(const SkewTableau& t, const char* op) {
  if (!t.is_straight()) throw PreconditionError(std::string(op) + " needs a straight tableau");
}

inline void require_letter(const SkewTableau& t, Letter x) {
  if (!t.alphabet()->contains(x)) throw PreconditionError("letter outside the tableau's alphabet");
}

inline void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!same_alphabet(a, b)) throw PreconditionError("operands use different alphabets");
}

/// Right insertion into row-major storage. x settles at the end of a row
/// when it may follow the last entry; otherwise it bumps the first entry it
/// may not follow.
inline void row_insert(std::vector<std::vector<Letter>>& rows, const SignedAlphabet& a, Letter x) {
  for (auto& row : rows) {
    auto it = std::partition_point(row.begin(), row.end(), [&](Letter y) { return row_compatible(a, y, x); });
    if (it == row.end()) {
      row.push_back(x);
      return;
    }
    std::swap(*it, x);
  }
  rows.push_back({x});
}

/// Left insertion on column-major storage.
inline void column_insert(std::vector<std::vector<Letter>>& cols, const SignedAlphabet& a, Letter x) {
  for (auto& col : cols) {
    auto it = std::partition_point(col.begin(), col.end(), [&](Letter y) { return column_compatible(a, y, x); });
    if (it == col.end()) {
      col.push_back(x);
      return;
    }
    std::swap(*it, x);
  }
  cols.push_back({x});
}

inline std::vector<std::vector<Letter>> to_columns(const SkewTableau& t) {
  std::vector<std::vector<Letter>> cols(static_cast<std::size_t>(t.shape().outer().part(1)));
  for (const auto& row : t.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  }
  return cols;
}

inline std::vector<std::vector<Letter>> to_rows(const std::vector<std::vector<Letter>>& cols) {
  std::vector<std::vector<Letter>> rows(cols.empty() ? 0 : cols.front().size());
  for (const auto& col : cols) {
    for (std::size_t i = 0; i < col.size(); ++i) rows[i].push_back(col[i]);
  }
  return rows;
}

}  // namespace detail

/// t → x.
inline Tableau insert_right(const Tableau& t, Letter x) {
  detail::require_straight(t, "insert_right");
  detail::require_letter(t, x);
  auto rows = t.rows();
  detail::row_insert(rows, *t.alphabet(), x);
  return detail::straight_from_rows(std::move(rows), t.alphabet());
}

/// x ← t.
inline Tableau insert_left(Letter x, const Tableau& t) {
  detail::require_straight(t, "insert_left");
  detail::require_letter(t, x);
  auto cols = detail::to_columns(t);
  detail::column_insert(cols, *t.alphabet(), x);
  return detail::straight_from_rows(detail::to_rows(cols), t.alphabet());
}

/// t → w: right-inserts the letters of w from left to right.
inline Tableau insert_word(const Tableau& t, const Word& w) {
  detail::require_straight(t, "insert_word");
  detail::require_same_alphabet(t.alphabet(), w.alphabet());
  auto rows = t.rows();
  for (Letter x : w.letters()) detail::row_insert(rows, *t.alphabet(), x);
  return detail::straight_from_rows(std::move(rows), t.alphabet());
}

/// C(w), by right insertion.
inline Tableau tableau_of_word(const Word& w) { return insert_word(Tableau(w.alphabet()), w); }

/// C(w), by left-inserting the letters of w from right to left.
inline Tableau tableau_of_word_left(const Word& w) {
  std::vector<std::vector<Letter>> cols;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) detail::column_insert(cols, *w.alphabet(), *it);
  return detail::straight_from_rows(detail::to_rows(cols), w.alphabet());
}

/// t ⋆ u.
inline Tableau product(const Tableau& t, const Tableau& u) {
  detail::require_straight(u, "product");
  return insert_word(t, read_row(u));
}

/// S ⋆ U for skew operands: C(read_row(S) read_row(U)).
inline Tableau skew_product(const SkewTableau& s, const SkewTableau& u) {
  detail::require_same_alphabet(s.alphabet(), u.alphabet());
  return tableau_of_word(read_row(s) + read_row(u));
}

}  // namespace superplactic
