#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace patcomp {

enum class PatternKind { Var, Constr, Tuple, Plus, Minus, Bottom, At, Anti };

/// Immutable extended pattern:
///   x | c(p1,...,pn) | <p1,...,pn> | p + q | p \ q | _|_ | x@p | !p
///
/// Nodes are shared; copying a Pattern is cheap.
class Pattern {
 public:
  static Pattern var(std::string name, std::string sort = {});
  static Pattern constr(std::string symbol, std::vector<Pattern> args = {});
  static Pattern tuple(std::vector<Pattern> args);
  static Pattern plus(Pattern left, Pattern right);
  static Pattern minus(Pattern left, Pattern right);
  static Pattern bottom();
  static Pattern at(Pattern alias, Pattern body);
  static Pattern anti(Pattern body);

  /// Left-nested sum p1 + ... + pn; the empty sum is _|_.
  static Pattern sum(std::span<const Pattern> summands);

  PatternKind kind() const;
  bool is(PatternKind k) const { return kind() == k; }
  bool isApplication() const { return is(PatternKind::Constr) || is(PatternKind::Tuple); }

  /// Variable name (Var) or symbol (Constr); empty otherwise.
  const std::string& name() const;
  /// Sort of a variable; empty when unknown.
  const std::string& sort() const;

  /// Constructor/tuple arguments; [left, right] for Plus/Minus;
  /// [alias, body] for At; [body] for Anti.
  std::span<const Pattern> children() const;
  std::size_t arity() const { return children().size(); }
  const Pattern& child(std::size_t i) const { return children()[i]; }

  const Pattern& left() const { return child(0); }
  const Pattern& right() const { return child(1); }
  const Pattern& alias() const { return child(0); }
  const Pattern& body() const { return is(PatternKind::At) ? child(1) : child(0); }

  /// Same node kind and name, new children.
  Pattern withChildren(std::vector<Pattern> children) const;
  /// Same variable, different sort.
  Pattern withSort(std::string sort) const;

  /// Identity of the shared node (stable for the lifetime of the pattern).
  const void* id() const { return node_.get(); }

  std::size_t size() const;
  std::size_t height() const;

  /// True when no Plus/Minus/Bottom/At/Anti occurs.
  bool isConstructorPattern() const;
  bool contains(PatternKind k) const;

  friend bool operator==(const Pattern& a, const Pattern& b);
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b);

 private:
  struct Node;
  explicit Pattern(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Concrete syntax used by the native format: "f(x,b) + f(x,f(y1,y2))",
/// "p \ q", "x@p", "!p", "_|_", "<p,q>".
std::string toString(const Pattern& p);
std::ostream& operator<<(std::ostream& os, const Pattern& p);

/// Renames variables to a canonical left-to-right numbering. Two patterns
/// are alpha-equivalent iff their canonical forms are equal.
Pattern canonicalize(const Pattern& p);
bool alphaEqual(const Pattern& a, const Pattern& b);

/// Replaces every x@p by p.
Pattern stripAliases(const Pattern& p);

}  // namespace patcomp
