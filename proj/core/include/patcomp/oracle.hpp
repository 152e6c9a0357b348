#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "patcomp/pattern.hpp"
#include "patcomp/signature.hpp"
#include "patcomp/term.hpp"

namespace patcomp {

/// Depth bound used when none is given.
inline constexpr int kDefaultOracleDepth = 3;

class EmptySort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The values a pattern ranges over: one sort, or a tuple of sorts.
struct ValueShape {
  std::vector<std::string> sorts;
  bool tuple = false;

  static ValueShape single(std::string sort) { return {{std::move(sort)}, false}; }
  static ValueShape of(std::vector<std::string> sorts) { return {std::move(sorts), true}; }

  friend bool operator==(const ValueShape&, const ValueShape&) = default;
};

/// Ground constructor terms of height <= depth. Height counts constants as 1.
struct GroundTermSet {
  ValueShape shape;
  int depth = 0;
  std::vector<Term> terms;

  bool contains(const Term& v) const;
  std::size_t size() const { return terms.size(); }
};

/// Memoized finite slice of T(C): per sort and depth, values in declaration
/// order of constructors, then lexicographic order of argument tuples.
class Universe {
 public:
  explicit Universe(const Signature& sig) : sig_(&sig) {}

  const std::vector<Term>& values(const std::string& sort, int depth);
  std::vector<Term> values(const ValueShape& shape, int depth);

  const Signature& signature() const { return *sig_; }

 private:
  const Signature* sig_;
  std::map<std::pair<std::string, int>, std::vector<Term>> cache_;
};

/// Empty sort names resolve to the only sort of a mono-sorted signature.
std::string resolveSort(const Signature& sig, const std::string& sort);

/// Throws EmptySort when no value of height <= depth exists.
GroundTermSet enumerate(const Signature& sig, const std::string& sort, int depth);

std::optional<ValueShape> inferShape(const Signature& sig, const Pattern& p);

/// { v | height(v) <= depth, p matches v }.
GroundTermSet oracleSemantics(const Signature& sig, const Pattern& p, int depth);
GroundTermSet oracleSemantics(const Signature& sig, const Pattern& p, int depth, const ValueShape& shape);

struct SemanticsComparison {
  bool equal = true;
  std::optional<Term> witness;  // in exactly one of the two semantics

  explicit operator bool() const { return equal; }
};

SemanticsComparison semanticsEqual(const Signature& sig, const Pattern& p, const Pattern& q, int depth);
SemanticsComparison semanticsEqual(const Signature& sig, const Pattern& p, const Pattern& q, int depth,
                                   const ValueShape& shape);

/// Ground semantics computed bottom-up from the set equations
/// ([[p+q]] = union, [[p\q]] = difference, [[x@p]] = [[p]], [[!p]] = complement)
/// on the depth-bounded universe. Independent of the matcher.
std::set<Term> evaluateEquations(const Signature& sig, const Pattern& p, int depth, const ValueShape& shape);

/// Smallest-height value of a sort (first in enumeration order).
Term smallestValue(const Signature& sig, const std::string& sort);

}  // namespace patcomp
