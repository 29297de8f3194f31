#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superplactic/errors.hpp"

namespace superplactic {

/// Z2-degree of a letter.
enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

/// A letter is its rank in the total order of its alphabet. Symbols and
/// parities live in the alphabet.
struct Letter {
  int rank = 0;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// Finite totally ordered alphabet with a parity on every letter.
class SignedAlphabet {
 public:
  struct Entry {
    std::string symbol;
    Parity parity = Parity::even;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SignedAlphabet() = default;

  explicit SignedAlphabet(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& symbol = entries_[i].symbol;
      if (!valid_symbol(symbol)) {
        throw InputError("invalid letter symbol '" + symbol + "'");
      }
      if (!index_.emplace(symbol, static_cast<int>(i)).second) {
        throw InputError("duplicate symbol '" + symbol + "'");
      }
    }
  }

  /// Symbols are non-empty, whitespace-free, and may not collide with the
  /// reserved tableau tokens `.` and `-` or start a comment.
  static bool valid_symbol(std::string_view symbol) {
    if (symbol.empty() || symbol == "." || symbol == "-" || symbol.front() == '#') {
      return false;
    }
    for (char c : symbol) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
        return false;
      }
    }
    return true;
  }

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }

  bool contains(Letter x) const { return x.rank >= 0 && x.rank < size(); }
  const std::string& symbol(Letter x) const { return entries_.at(static_cast<std::size_t>(x.rank)).symbol; }
  Parity parity(Letter x) const { return entries_.at(static_cast<std::size_t>(x.rank)).parity; }
  bool is_even(Letter x) const { return parity(x) == Parity::even; }
  bool is_odd(Letter x) const { return parity(x) == Parity::odd; }

  std::optional<Letter> find(std::string_view symbol) const {
    auto it = index_.find(std::string(symbol));
    if (it == index_.end()) return std::nullopt;
    return Letter{it->second};
  }

  Letter letter(std::string_view symbol) const {
    if (auto x = find(symbol)) return *x;
    throw InputError("unknown letter '" + std::string(symbol) + "'");
  }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(entries_.size());
    for (int i = 0; i < size(); ++i) out.push_back(Letter{i});
    return out;
  }

  /// Image of x in the opposite alphabet.
  Letter star(Letter x) const { return Letter{size() - 1 - x.rank}; }

  friend bool operator==(const SignedAlphabet& a, const SignedAlphabet& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const SignedAlphabet>;

inline AlphabetPtr make_alphabet(std::vector<SignedAlphabet::Entry> entries) {
  return std::make_shared<const SignedAlphabet>(std::move(entries));
}

/// Alphabet {1<2<...<n}; letter k (1-based) is odd iff odd_mask bit k-1 is set.
inline AlphabetPtr numeric_alphabet(int n, unsigned odd_mask = 0) {
  std::vector<SignedAlphabet::Entry> entries;
  for (int i = 0; i < n; ++i) {
    entries.push_back({std::to_string(i + 1), ((odd_mask >> i) & 1U) ? Parity::odd : Parity::even});
  }
  return make_alphabet(std::move(entries));
}

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// `left` may stand immediately left of `right` in a row: weakly increasing,
/// repetition only of even letters. Shared by validation, insertion and
/// sliding so the parity rules cannot drift apart.
inline bool row_compatible(const SignedAlphabet& a, Letter left, Letter right) {
  return left < right || (left == right && a.is_even(left));
}

/// `upper` may stand immediately above `lower` in a column: weakly increasing,
/// repetition only of odd letters.
inline bool column_compatible(const SignedAlphabet& a, Letter upper, Letter lower) {
  return upper < lower || (upper == lower && a.is_odd(upper));
}

/// Parses the SIGMA format: one `<symbol> <0|1>` per line in increasing
/// order, `#` comments, blank lines ignored.
inline AlphabetPtr parse_alphabet(std::string_view text, std::string_view source = "sigma") {
  std::vector<SignedAlphabet::Entry> entries;
  std::unordered_map<std::string, int> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw InputError(std::string(source) + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string symbol;
    if (!(fields >> symbol) || symbol.front() == '#') continue;
    std::string parity_token;
    if (!(fields >> parity_token)) fail("missing parity for symbol '" + symbol + "'");
    std::string extra;
    if (fields >> extra) fail("unexpected token '" + extra + "'");
    if (parity_token != "0" && parity_token != "1") {
      fail("parity must be 0 or 1, got '" + parity_token + "'");
    }
    if (!SignedAlphabet::valid_symbol(symbol)) fail("invalid symbol '" + symbol + "'");
    if (!seen.emplace(symbol, line_no).second) {
      fail("duplicate symbol '" + symbol + "' (first on line " + std::to_string(seen[symbol]) + ")");
    }
    entries.push_back({symbol, parity_token == "1" ? Parity::odd : Parity::even});
  }
  if (entries.empty()) {
    line_no = std::max(line_no, 1);
    fail("empty alphabet");
  }
  return make_alphabet(std::move(entries));
}

inline std::string format_alphabet(const SignedAlphabet& a) {
  std::string out;
  for (const auto& e : a.entries()) {
    out += e.symbol;
    out += e.parity == Parity::odd ? " 1\n" : " 0\n";
  }
  return out;
}

/// Toggles the trailing star, so starring twice restores the symbol.
inline std::string star_symbol(std::string_view symbol) {
  if (symbol.size() > 1 && symbol.back() == '*') return std::string(symbol.substr(0, symbol.size() - 1));
  return std::string(symbol) + "*";
}

/// The opposite alphabet: reversed order, starred symbols, same parities.
/// opposite(opposite(a)) == a exactly.
inline AlphabetPtr opposite(const SignedAlphabet& a) {
  std::vector<SignedAlphabet::Entry> entries;
  entries.reserve(a.entries().size());
  for (auto it = a.entries().rbegin(); it != a.entries().rend(); ++it) {
    entries.push_back({star_symbol(it->symbol), it->parity});
  }
  return make_alphabet(std::move(entries));
}

/// A finite word over one signed alphabet.
class Word {
 public:
  Word() = default;
  explicit Word(AlphabetPtr alphabet, std::vector<Letter> letters = {})
      : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) throw PreconditionError("word without alphabet");
    for (Letter x : letters_) {
      if (!alphabet_->contains(x)) throw PreconditionError("letter rank " + std::to_string(x.rank) + " outside alphabet");
    }
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_ && same_alphabet(a.alphabet_, b.alphabet_);
  }
  friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

  friend Word operator+(const Word& a, const Word& b) {
    if (!same_alphabet(a.alphabet_, b.alphabet_)) throw PreconditionError("concatenating words over different alphabets");
    std::vector<Letter> letters = a.letters_;
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return Word(a.alphabet_, std::move(letters));
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

/// Whitespace-separated symbol tokens.
inline Word parse_word(const AlphabetPtr& alphabet, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) letters.push_back(alphabet->letter(token));
  return Word(alphabet, std::move(letters));
}

inline std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w.alphabet()->symbol(w[i]);
  }
  return out;
}

/// w* = x_k* ... x_1*, written over `opposite_alphabet` (which must be
/// opposite(*w.alphabet())).
inline Word star_word(const Word& w, AlphabetPtr opposite_alphabet) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(w.alphabet()->star(*it));
  }
  return Word(std::move(opposite_alphabet), std::move(letters));
}

inline Word star_word(const Word& w) { return star_word(w, opposite(*w.alphabet())); }

inline Parity degree(const Word& w) {
  Parity d = Parity::even;
  for (Letter x : w.letters()) d = d + w.alphabet()->parity(x);
  return d;
}

}  // namespace superplactic
