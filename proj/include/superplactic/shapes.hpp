#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superplactic/errors.hpp"

namespace superplactic {

/// A box position, 1-based, row 1 on top.
struct Cell {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string format_cell(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

/// Weakly decreasing sequence of positive parts. Trailing zeros are stripped
/// on construction, so the empty sequence is the only representation of the
/// empty partition.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
        throw InputError("not a partition: " + describe(parts_));
      }
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  /// Number of boxes.
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  /// Number of parts (the height).
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Length of a 1-based row; zero past the last part.
  int part(int row) const {
    return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }

  bool contains_cell(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= part(c.row); }

  /// Whether a box can be added at the end of `row` (1-based).
  bool addable(int row) const { return row >= 1 && row <= length() + 1 && (row == 1 || part(row - 1) > part(row)); }
  /// Whether the last box of `row` can be removed.
  bool removable(int row) const { return row >= 1 && row <= length() && part(row) > part(row + 1); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  static std::string describe(const std::vector<int>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
  }

  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.part(1)), 0);
  for (int len : p.parts()) {
    for (int j = 0; j < len; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

/// mu ⊆ lam cellwise.
inline bool contains(const Partition& mu, const Partition& lam) {
  if (mu.length() > lam.length()) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) > lam.part(i)) return false;
  }
  return true;
}

inline Partition add_box(const Partition& p, int row) {
  if (!p.addable(row)) throw PreconditionError("cannot add a box in row " + std::to_string(row));
  std::vector<int> parts = p.parts();
  if (row == p.length() + 1) parts.push_back(0);
  ++parts[static_cast<std::size_t>(row - 1)];
  return Partition(std::move(parts));
}

inline Partition remove_box(const Partition& p, int row) {
  if (!p.removable(row)) throw PreconditionError("cannot remove a box from row " + std::to_string(row));
  std::vector<int> parts = p.parts();
  --parts[static_cast<std::size_t>(row - 1)];
  return Partition(std::move(parts));
}

/// Cells (i, lam_i) whose removal leaves a partition, sorted by row.
inline std::vector<Cell> removable_cells(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 1; i <= p.length(); ++i) {
    if (p.removable(i)) out.push_back({i, p.part(i)});
  }
  return out;
}

/// Cells whose addition keeps a partition, sorted by row.
inline std::vector<Cell> addable_cells(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 1; i <= p.length() + 1; ++i) {
    if (p.addable(i)) out.push_back({i, p.part(i) + 1});
  }
  return out;
}

/// The pair outer/inner with inner ⊆ outer.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer) : outer_(std::move(outer)) {}  // NOLINT: lam/∅ is lam
  SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!superplactic::contains(inner_, outer_)) throw InputError("inner shape is not contained in outer shape");
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  bool is_straight() const { return inner_.empty(); }
  int rows() const { return outer_.length(); }
  int row_size(int row) const { return outer_.part(row) - inner_.part(row); }

  bool contains_cell(Cell c) const { return outer_.contains_cell(c) && !inner_.contains_cell(c); }

  /// Cells of the skew diagram in row-major order.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 1; i <= rows(); ++i) {
      for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
    }
    return out;
  }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape& a, const SkewShape& b) {
    if (auto c = a.outer_ <=> b.outer_; c != 0) return c;
    return a.inner_ <=> b.inner_;
  }

 private:
  Partition outer_;
  Partition inner_;
};

/// Cells of Y(inner) whose south and east neighbours lie outside Y(inner).
inline std::vector<Cell> inner_corners(const SkewShape& s) { return removable_cells(s.inner()); }

/// Boxes of the frame whose south and east neighbours lie outside the skew
/// diagram. For a filled cell this is the same as being a removable corner of
/// the outer shape; a cell of the inner shape qualifies exactly when it is a
/// removable corner of both shapes (an inner corner that is also outer).
inline std::vector<Cell> outer_corners(const SkewShape& s) { return removable_cells(s.outer()); }

inline std::string format_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[static_cast<std::size_t>(i)]);
  }
  return out;
}

inline std::string format_skew_shape(const SkewShape& s) {
  if (s.is_straight()) return format_partition(s.outer());
  return format_partition(s.outer()) + "/" + format_partition(s.inner());
}

/// `4,3,3,2,1`, or `-` for the empty partition.
inline Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "-" || text.empty()) return {};
  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    if (token.empty()) throw InputError("empty part in partition '" + std::string(text) + "'");
    int value = 0;
    for (char c : token) {
      if (c < '0' || c > '9') throw InputError("bad part '" + std::string(token) + "' in partition");
      value = value * 10 + (c - '0');
      if (value > 1'000'000) throw InputError("partition part too large");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

/// `outer/inner` or a plain partition.
inline SkewShape parse_skew_shape(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
  return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

/// All partitions of n in increasing lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// All mu ⊆ lam, sorted.
inline std::vector<Partition> subpartitions(const Partition& lam) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto& self, int row, int bound) -> void {
    out.emplace_back(current);
    bound = std::min(bound, lam.part(row));
    for (int p = 1; p <= bound; ++p) {
      current.push_back(p);
      self(self, row + 1, p);
      current.pop_back();
    }
  };
  rec(rec, 1, lam.part(1));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace superplactic
