#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "patcomp/pattern.hpp"

namespace patcomp {

enum class TermKind { Var, App, Tuple };

/// First-order term over constructors, defined symbols and variables. Ground
/// constructor terms (and tuples of them) are the values patterns denote.
class Term {
 public:
  static Term var(std::string name, std::string sort = {});
  static Term app(std::string symbol, std::vector<Term> args = {});
  static Term tuple(std::vector<Term> args);

  TermKind kind() const;
  bool is(TermKind k) const { return kind() == k; }
  const std::string& name() const;
  const std::string& sort() const;
  std::span<const Term> args() const;
  std::size_t arity() const { return args().size(); }
  const Term& arg(std::size_t i) const { return args()[i]; }

  Term withArgs(std::vector<Term> args) const;

  bool isGround() const;
  std::size_t height() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string toString(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

/// Views a constructor pattern (Var/Constr/Tuple only) as a term.
Term toTerm(const Pattern& p);
/// Views a term over constructors and variables as a constructor pattern.
Pattern toPattern(const Term& t);

class InvalidPosition : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Path of 1-based argument indices from the root; empty is the root.
struct Position {
  std::vector<std::size_t> path;

  Position child(std::size_t i) const;
  bool isPrefixOf(const Position& other) const;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// "ε", "ε.2.1".
std::string toString(const Position& pos);
std::ostream& operator<<(std::ostream& os, const Position& pos);

const Term& subtermAt(const Term& t, const Position& pos);
Term substituteAt(const Term& t, const Position& pos, Term replacement);
const Pattern& subtermAt(const Pattern& p, const Position& pos);
Pattern substituteAt(const Pattern& p, const Position& pos, Pattern replacement);

/// All positions of t in pre-order.
std::vector<Position> positions(const Term& t);

/// Finite map from variable names to terms; identity elsewhere.
class Substitution {
 public:
  Substitution() = default;

  void bind(const std::string& name, Term value) { bindings_.insert_or_assign(name, std::move(value)); }
  const Term* lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return bindings_.count(name) != 0; }
  std::size_t size() const { return bindings_.size(); }
  const std::map<std::string, Term>& bindings() const { return bindings_; }

  Term apply(const Term& t) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, Term> bindings_;
};

std::string toString(const Substitution& s);

}  // namespace patcomp
