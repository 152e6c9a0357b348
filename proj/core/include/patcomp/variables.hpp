#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "patcomp/fresh.hpp"
#include "patcomp/pattern.hpp"
#include "patcomp/signature.hpp"
#include "patcomp/term.hpp"

namespace patcomp {

class AntiPresent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Set of variable names that may also be "all variables" (the matchable
/// variables of _|_). The universal set is a token, never an enumeration.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::set<std::string> names) : names_(std::move(names)) {}
  static VarSet all() {
    VarSet s;
    s.universal_ = true;
    return s;
  }

  bool isUniversal() const { return universal_; }
  bool contains(const std::string& name) const { return universal_ || names_.count(name) != 0; }
  /// Meaningless for the universal set.
  const std::set<std::string>& names() const { return names_; }
  bool empty() const { return !universal_ && names_.empty(); }

  VarSet unite(const VarSet& other) const;
  VarSet intersect(const VarSet& other) const;
  /// this \ other; the universal set minus a finite set stays universal.
  VarSet minus(const VarSet& other) const;
  bool subsetOf(const VarSet& other) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  bool universal_ = false;
  std::set<std::string> names_;
};

std::string toString(const VarSet& s);

/// All variables occurring in p (aliases included).
std::set<std::string> vars(const Pattern& p);
std::set<std::string> vars(const Term& t);

/// Matchable variables. Throws AntiPresent on anti-patterns.
VarSet mvar(const Pattern& p);
/// Free variables: vars(p) \ mvar(p).
std::set<std::string> fvar(const Pattern& p);

struct LinearityViolation {
  std::string variable;
  Position first;
  Position second;
};

/// Per-form linearity: arguments of a constructor or tuple, both sides of a
/// complement and an alias with its body have disjoint variables; the two
/// alternatives of a sum are independent and may share names.
std::optional<LinearityViolation> checkLinear(const Pattern& p);

/// Sort of the values p denotes, from its variables and head symbols; empty
/// when nothing in p determines it (e.g. _|_ or an unsorted variable).
std::string inferSort(const Signature& sig, const Pattern& p);

/// Renames every variable of p to a fresh name (keeping sorts).
Pattern renameApart(const Pattern& p, FreshNamer& fresh);

}  // namespace patcomp
