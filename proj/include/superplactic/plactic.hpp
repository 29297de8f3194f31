#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "superplactic/errors.hpp"
#include "superplactic/insertion.hpp"
#include "superplactic/signed_alphabet.hpp"

namespace superplactic {

/// One application of a super Knuth relation to three adjacent letters.
///
/// `swap_first` relations exchange the first two letters of the window
/// (x z y <-> z x y); `swap_last` relations exchange the last two
/// (y x z <-> y z x). `forward` is true when the window reads as the left
/// side of the relation.
struct RelationInstance {
  enum class Kind { swap_first, swap_last };
  std::size_t position = 0;
  Kind kind = Kind::swap_first;
  bool forward = true;
  friend bool operator==(const RelationInstance&, const RelationInstance&) = default;
};

namespace detail {

/// lo ≤ mid ≤ hi with the parity side conditions of either relation family.
/// `low_tie` is the parity required when lo == mid, `high_tie` when mid == hi.
inline bool between(const SignedAlphabet& a, Letter lo, Letter mid, Letter hi, Parity low_tie, Parity high_tie) {
  if (lo > mid || mid > hi) return false;
  if (lo == mid && a.parity(mid) != low_tie) return false;
  if (mid == hi && a.parity(mid) != high_tie) return false;
  return true;
}

}  // namespace detail

inline std::vector<RelationInstance> knuth_relations(const Word& w) {
  std::vector<RelationInstance> out;
  const auto& a = *w.alphabet();
  for (std::size_t p = 0; p + 2 < w.size(); ++p) {
    const Letter x = w[p], y = w[p + 1], z = w[p + 2];
    using K = RelationInstance::Kind;
    // x z y with x ≤ y ≤ z, or z x y.
    if (detail::between(a, x, z, y, Parity::even, Parity::odd)) out.push_back({p, K::swap_first, true});
    if (detail::between(a, y, z, x, Parity::even, Parity::odd)) out.push_back({p, K::swap_first, false});
    // y x z with x ≤ y ≤ z, or y z x.
    if (detail::between(a, y, x, z, Parity::odd, Parity::even)) out.push_back({p, K::swap_last, true});
    if (detail::between(a, z, x, y, Parity::odd, Parity::even)) out.push_back({p, K::swap_last, false});
  }
  return out;
}

inline Word apply_relation(const Word& w, const RelationInstance& r) {
  std::vector<Letter> letters = w.letters();
  if (r.kind == RelationInstance::Kind::swap_first) {
    std::swap(letters[r.position], letters[r.position + 1]);
  } else {
    std::swap(letters[r.position + 1], letters[r.position + 2]);
  }
  return Word(w.alphabet(), std::move(letters));
}

/// Words one relation step away from w, sorted and without duplicates.
inline std::vector<Word> knuth_neighbors(const Word& w) {
  std::vector<Word> out;
  for (const auto& r : knuth_relations(w)) out.push_back(apply_relation(w, r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

struct LettersHash {
  std::size_t operator()(const std::vector<Letter>& v) const noexcept {
    std::size_t h = v.size();
    for (Letter x : v) h ^= static_cast<std::size_t>(x.rank) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Breadth-first closure of w under the relations. Stops early, returning
/// true, as soon as `stop` accepts a word.
inline bool bfs_closure(const Word& w, std::size_t max_class_size, const std::function<bool(const std::vector<Letter>&)>& stop,
                        std::unordered_set<std::vector<Letter>, LettersHash>& seen) {
  std::deque<std::vector<Letter>> queue{w.letters()};
  seen.insert(w.letters());
  if (stop && stop(w.letters())) return true;
  while (!queue.empty()) {
    Word current(w.alphabet(), std::move(queue.front()));
    queue.pop_front();
    for (const auto& r : knuth_relations(current)) {
      Word next = apply_relation(current, r);
      if (!seen.insert(next.letters()).second) continue;
      if (seen.size() > max_class_size) {
        throw ResourceError("congruence class exceeds " + std::to_string(max_class_size) + " words");
      }
      if (stop && stop(next.letters())) return true;
      queue.push_back(next.letters());
    }
  }
  return false;
}

}  // namespace detail

inline constexpr std::size_t default_max_class_size = 100000;

/// Decides w ~ v by exploring the relation graph from w. Independent of
/// insertion.
inline bool equivalent_bfs(const Word& w, const Word& v, std::size_t max_class_size = default_max_class_size) {
  if (!same_alphabet(w.alphabet(), v.alphabet())) throw PreconditionError("words over different alphabets");
  if (w.size() != v.size()) return false;
  std::unordered_set<std::vector<Letter>, detail::LettersHash> seen;
  return detail::bfs_closure(w, max_class_size, [&](const std::vector<Letter>& u) { return u == v.letters(); }, seen);
}

/// All words congruent to w, sorted.
inline std::vector<Word> congruence_class(const Word& w, std::size_t max_class_size = default_max_class_size) {
  std::unordered_set<std::vector<Letter>, detail::LettersHash> seen;
  detail::bfs_closure(w, max_class_size, nullptr, seen);
  std::vector<Word> out;
  out.reserve(seen.size());
  for (const auto& letters : seen) out.emplace_back(w.alphabet(), letters);
  std::sort(out.begin(), out.end());
  return out;
}

/// Decides w ~ v by comparing insertion tableaux.
inline bool equivalent(const Word& w, const Word& v) {
  if (!same_alphabet(w.alphabet(), v.alphabet())) throw PreconditionError("words over different alphabets");
  return w.size() == v.size() && tableau_of_word(w) == tableau_of_word(v);
}

inline constexpr std::size_t greene_max_length = 10;

namespace detail {

/// Largest total length of k disjoint subsequences of w in which every
/// consecutive pair (earlier, later) satisfies `link`. Memoized over
/// (position, sorted tails).
inline int greene(const Word& w, int k, const std::function<bool(Letter, Letter)>& link) {
  if (w.size() > greene_max_length) {
    throw ResourceError("Greene invariants are limited to words of length " + std::to_string(greene_max_length));
  }
  if (k < 0) throw PreconditionError("negative Greene index");
  k = std::min<int>(k, static_cast<int>(w.size()));
  if (k == 0) return 0;
  // tail -1 marks an empty subsequence
  std::map<std::pair<std::size_t, std::vector<int>>, int> memo;
  auto best = [&](auto& self, std::size_t pos, std::vector<int> tails) -> int {
    if (pos == w.size()) return 0;
    std::sort(tails.begin(), tails.end());
    auto key = std::make_pair(pos, tails);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int result = self(self, pos + 1, tails);
    const Letter x = w[pos];
    bool tried_empty = false;
    for (std::size_t i = 0; i < tails.size(); ++i) {
      if (tails[i] < 0) {
        if (tried_empty) continue;
        tried_empty = true;
      } else if (!link(Letter{tails[i]}, x)) {
        continue;
      }
      auto next = tails;
      next[i] = x.rank;
      result = std::max(result, 1 + self(self, pos + 1, std::move(next)));
    }
    memo.emplace(std::move(key), result);
    return result;
  };
  return best(best, 0, std::vector<int>(static_cast<std::size_t>(k), -1));
}

}  // namespace detail

/// l_k(w): k disjoint subsequences, each a valid row.
inline int greene_row(const Word& w, int k) {
  const auto& a = *w.alphabet();
  return detail::greene(w, k, [&](Letter prev, Letter next) { return row_compatible(a, prev, next); });
}

/// l̃_k(w): k disjoint subsequences, each a column read bottom to top.
inline int greene_col(const Word& w, int k) {
  const auto& a = *w.alphabet();
  return detail::greene(w, k, [&](Letter prev, Letter next) { return column_compatible(a, next, prev); });
}

/// Shape with λ_k = l_k(w) − l_{k−1}(w).
inline Partition shape_from_greene(const Word& w) {
  std::vector<int> parts;
  int previous = 0;
  for (int k = 1; previous < static_cast<int>(w.size()); ++k) {
    const int current = greene_row(w, k);
    parts.push_back(current - previous);
    previous = current;
  }
  return Partition(std::move(parts));
}

}  // namespace superplactic
