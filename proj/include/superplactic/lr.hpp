#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superplactic/errors.hpp"
#include "superplactic/insertion.hpp"
#include "superplactic/taquin.hpp"

namespace superplactic {

/// Enumeration limits for the LR machinery.
struct LrBudget {
  int max_boxes = 8;
  int max_alphabet = 5;
};

inline void check_budget(const SkewShape& shape, const SignedAlphabet& a, const LrBudget& budget) {
  if (shape.outer().size() > budget.max_boxes) {
    throw ResourceError("outer shape has " + std::to_string(shape.outer().size()) + " boxes, budget is " +
                        std::to_string(budget.max_boxes));
  }
  if (a.size() > budget.max_alphabet) {
    throw ResourceError("alphabet has " + std::to_string(a.size()) + " letters, budget is " + std::to_string(budget.max_alphabet));
  }
}

/// Formal integer combination of straight tableaux over one alphabet.
class TableauSum {
 public:
  explicit TableauSum(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  /// The empty tableau with coefficient 1.
  static TableauSum unit(AlphabetPtr alphabet) {
    TableauSum s(alphabet);
    s.add(Tableau(alphabet), 1);
    return s;
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::map<Tableau, long long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  long long coefficient(const Tableau& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Tableau& t, long long c) {
    if (!t.is_straight()) throw PreconditionError("tableau sums hold straight tableaux only");
    if (!same_alphabet(t.alphabet(), alphabet_)) throw PreconditionError("tableau over a different alphabet");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  friend TableauSum operator+(TableauSum a, const TableauSum& b) {
    for (const auto& [t, c] : b.terms_) a.add(t, c);
    return a;
  }

  /// Bilinear extension of the insertion product.
  friend TableauSum operator*(const TableauSum& a, const TableauSum& b) {
    TableauSum out(a.alphabet_);
    for (const auto& [t, c] : a.terms_) {
      for (const auto& [u, d] : b.terms_) out.add(product(t, u), c * d);
    }
    return out;
  }

  friend bool operator==(const TableauSum& a, const TableauSum& b) { return a.terms_ == b.terms_; }

 private:
  AlphabetPtr alphabet_;
  std::map<Tableau, long long> terms_;
};

/// x^t: letter multiplicities.
struct Monomial {
  std::map<Letter, int> exponents;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial monomial(const SkewTableau& t) {
  Monomial m;
  for (const auto& row : t.rows()) {
    for (Letter x : row) ++m.exponents[x];
  }
  return m;
}

inline std::map<Monomial, long long> sum_to_polynomial(const TableauSum& s) {
  std::map<Monomial, long long> out;
  for (const auto& [t, c] : s.terms()) {
    auto [it, inserted] = out.try_emplace(monomial(t), c);
    if (!inserted && (it->second += c) == 0) out.erase(it);
  }
  return out;
}

/// For each straight tableau t, the number of skew tableaux of the given
/// shape that rectify to t.
inline std::map<Tableau, long long> rectification_fibers(const SkewShape& shape, const AlphabetPtr& a,
                                                         const LrBudget& budget = {}) {
  check_budget(shape, *a, budget);
  std::map<Tableau, long long> fibers;
  for_each_tableau(shape, a, [&](const SkewTableau& s) { ++fibers[rectify(s)]; });
  return fibers;
}

/// S_{lam/mu}: every skew tableau contributes its rectification.
inline TableauSum schur_sum(const SkewShape& shape, const AlphabetPtr& a, const LrBudget& budget = {}) {
  TableauSum out(a);
  for (const auto& [t, c] : rectification_fibers(shape, a, budget)) out.add(t, c);
  return out;
}

namespace detail {

/// c^nu from the fibers, checking that every tableau of shape nu has the
/// same fiber size. Zero when no tableau of shape nu exists.
inline long long coefficient_from_fibers(const std::map<Tableau, long long>& fibers, const std::vector<Tableau>& targets,
                                         const Partition& nu) {
  if (targets.empty()) return 0;
  auto fiber = [&](const Tableau& t) {
    auto it = fibers.find(t);
    return it == fibers.end() ? 0LL : it->second;
  };
  const long long c = fiber(targets.front());
  for (const auto& t : targets) {
    if (fiber(t) != c) {
      throw InvariantViolation("fiber size depends on the tableau for shape " + format_partition(nu) + ": " +
                               std::to_string(c) + " vs " + std::to_string(fiber(t)));
    }
  }
  return c;
}

}  // namespace detail

inline long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu, const AlphabetPtr& a,
                                const LrBudget& budget = {}) {
  const SkewShape shape(lam, mu);
  check_budget(shape, *a, budget);
  if (nu.size() != shape.size()) return 0;
  const auto targets = enumerate_tableaux(SkewShape(nu), a);
  if (targets.empty()) return 0;
  return detail::coefficient_from_fibers(rectification_fibers(shape, a, budget), targets, nu);
}

struct LrTerm {
  Partition nu;
  long long coefficient = 0;
  /// #T(Σ, nu).
  long long tableaux = 0;
};

struct LrReport {
  SkewShape shape;
  AlphabetPtr alphabet;
  /// #SkewT(Σ, lam/mu).
  long long skew_tableaux = 0;
  /// Every nu of the right size with #T(Σ, nu) > 0, sorted.
  std::vector<LrTerm> terms;
};

/// Checks that fibers are constant on each shape and that
/// #SkewT(lam/mu) = Σ_nu c^nu · #T(nu). Throws InvariantViolation otherwise.
inline LrReport verify_lr_identity(const Partition& lam, const Partition& mu, const AlphabetPtr& a,
                                   const LrBudget& budget = {}) {
  const SkewShape shape(lam, mu);
  check_budget(shape, *a, budget);
  LrReport report{shape, a, 0, {}};
  const auto fibers = rectification_fibers(shape, a, budget);
  for (const auto& [t, c] : fibers) report.skew_tableaux += c;
  long long total = 0;
  long long accounted = 0;
  for (const auto& nu : partitions_of(shape.size())) {
    const auto targets = enumerate_tableaux(SkewShape(nu), a);
    if (targets.empty()) continue;
    const long long c = detail::coefficient_from_fibers(fibers, targets, nu);
    const auto n = static_cast<long long>(targets.size());
    total += c * n;
    for (const auto& t : targets) {
      if (fibers.contains(t)) ++accounted;
    }
    report.terms.push_back({nu, c, n});
  }
  if (accounted != static_cast<long long>(fibers.size())) {
    throw InvariantViolation("a rectified tableau has a shape of the wrong size");
  }
  if (total != report.skew_tableaux) {
    throw InvariantViolation("LR identity fails for " + format_skew_shape(shape) + ": " + std::to_string(report.skew_tableaux) +
                             " skew tableaux vs " + std::to_string(total));
  }
  return report;
}

}  // namespace superplactic
