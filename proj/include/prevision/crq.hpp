#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prevision/logic.hpp"
#include "prevision/numeric.hpp"

namespace prevision {

/// A conjunction term: the non-empty set of conditional indices it joins.
/// Canonical form is sorted and duplicate-free regardless of input order.
class Term {
 public:
  Term() = default;
  explicit Term(std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int i) const;
  bool empty() const { return members_.empty(); }

  /// Render as "{0,2}".
  std::string str() const;

  auto operator<=>(const Term&) const = default;

 private:
  std::vector<int> members_;
};

/// Assessed previsions keyed by term. Values are validated into [0,1].
class PrevisionMap {
 public:
  void set(const Term& term, const Rational& value);
  bool contains(const Term& term) const;
  const Rational& at(const Term& term) const;  // InputError naming the term
  const std::map<Term, Rational>& entries() const { return entries_; }

 private:
  std::map<Term, Rational> entries_;
};

/// Value of a conjunction on each constituent: 1 when every member's
/// conditional is true, 0 when some member's is false, and the assessed
/// prevision of the void sub-conjunction otherwise. `c0_value` carries the
/// all-void row (the term's own prevision) when C_0 is non-empty.
struct ValueTable {
  RVector values;
  std::optional<Rational> c0_value;
};

/// Builds the value table of `term` over `table`. Previsions must contain
/// every sub-conjunction whose void pattern actually occurs; a missing one
/// raises InputError naming it.
ValueTable conjunction_value_table(const Term& term,
                                   const ConstituentTable& table,
                                   const PrevisionMap& previsions);

}  // namespace prevision
