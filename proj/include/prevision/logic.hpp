#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "prevision/errors.hpp"

namespace prevision {

/// Exhaustive truth-table enumeration is capped at this many atoms.
inline constexpr int kDefaultAtomCap = 20;

/// Ordered list of named atoms; the order fixes the bit layout of
/// assignment masks (atom i corresponds to bit i).
class AtomList {
 public:
  AtomList() = default;
  explicit AtomList(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(const std::string& name) const;
  int index(const std::string& name) const;  // throws InputError if unknown

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// Immutable Boolean formula over named atoms. Compose with ~, &, |.
class Event {
 public:
  enum class Kind : std::uint8_t { True, False, Atom, Not, And, Or };

  Event();  // the constant TRUE
  static Event atom(std::string name);
  static Event constant(bool value);

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const;
  Event child(int i) const;  // Not: 0; And/Or: 0 and 1

  /// Minimal-parenthesis rendering with `!`, `&`, `|`, `0`, `1`.
  std::string str() const;

  void collect_atoms(std::set<std::string>& out) const;

  friend Event operator~(const Event& e);
  friend Event operator&(const Event& a, const Event& b);
  friend Event operator|(const Event& a, const Event& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> a, b;
  };
  explicit Event(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Event wrap(Kind kind, const Event& a, const Event& b);

  std::shared_ptr<const Node> node_;
  friend bool evaluate(const Event&, const AtomList&, std::uint32_t);
};

/// Truth value under a named assignment. Throws InputError when the formula
/// mentions an atom missing from the assignment.
bool evaluate(const Event& e,
              const std::unordered_map<std::string, bool>& assignment);

/// Truth value under a bitmask assignment over `atoms`.
bool evaluate(const Event& e, const AtomList& atoms, std::uint32_t mask);

/// True when some assignment over `atoms` satisfies `e`. Every atom of `e`
/// must be listed. Throws CapacityError past `atom_cap` atoms.
bool is_satisfiable(const Event& e, const AtomList& atoms,
                    int atom_cap = kDefaultAtomCap);

/// Logical equivalence over all assignments of `atoms`.
bool equivalent(const Event& a, const Event& b, const AtomList& atoms,
                int atom_cap = kDefaultAtomCap);

/// Events are logically independent when every one of the 2^k sign patterns
/// of them is satisfiable (no Boolean constraint ties them together).
bool logically_independent(std::span<const Event> events, const AtomList& atoms,
                           int atom_cap = kDefaultAtomCap);

/// A conditional event: consequent given antecedent.
struct ConditionalEvent {
  Event consequent;
  Event antecedent;
};

/// Ternary outcome of a conditional under one assignment.
enum class Tern : std::uint8_t { True, False, Void };

/// One constituent: a maximal region of assignments on which every
/// conditional of the family has a constant ternary outcome.
struct Constituent {
  std::vector<Tern> tags;                  // one per conditional
  std::vector<std::uint32_t> assignments;  // ascending satisfying masks
};

/// Constituents generated by a family of conditionals. `constituents` holds
/// C_1..C_m (some antecedent true), in ascending order of smallest
/// assignment; `c0` is the all-antecedents-false region when non-empty.
struct ConstituentTable {
  int atom_count = 0;
  std::vector<Constituent> constituents;
  std::optional<Constituent> c0;

  int size() const { return static_cast<int>(constituents.size()); }
  int family_size() const;
};

/// Enumerates the constituents of a family. Throws InputError when the
/// family is empty or some antecedent is unsatisfiable, CapacityError past
/// the atom cap.
ConstituentTable enumerate_constituents(
    const std::vector<ConditionalEvent>& family, const AtomList& atoms,
    int atom_cap = kDefaultAtomCap);

}  // namespace prevision
