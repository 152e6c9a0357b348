#include "patcomp/term.hpp"

#include <algorithm>
#include <sstream>

namespace patcomp {

struct Term::Node {
  TermKind kind;
  std::string name;
  std::string sort;
  std::vector<Term> args;
};

Term Term::var(std::string name, std::string sort) {
  return Term(std::make_shared<const Node>(Node{TermKind::Var, std::move(name), std::move(sort), {}}));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{TermKind::App, std::move(symbol), {}, std::move(args)}));
}

Term Term::tuple(std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{TermKind::Tuple, {}, {}, std::move(args)}));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const std::string& Term::sort() const { return node_->sort; }
std::span<const Term> Term::args() const { return node_->args; }

Term Term::withArgs(std::vector<Term> args) const {
  return Term(std::make_shared<const Node>(Node{node_->kind, node_->name, node_->sort, std::move(args)}));
}

bool Term::isGround() const {
  if (is(TermKind::Var)) return false;
  return std::all_of(args().begin(), args().end(), [](const Term& a) { return a.isGround(); });
}

std::size_t Term::height() const {
  std::size_t h = 0;
  for (const auto& a : args()) h = std::max(h, a.height());
  return h + 1;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.arg(i) == b.arg(i))) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = a.arg(i) <=> b.arg(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

void print(std::ostream& os, const Term& t) {
  auto printArgs = [&os](std::span<const Term> args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) os << ',';
      print(os, args[i]);
    }
  };
  switch (t.kind()) {
    case TermKind::Var:
      os << t.name();
      break;
    case TermKind::App:
      os << t.name();
      if (t.arity() > 0) {
        os << '(';
        printArgs(t.args());
        os << ')';
      }
      break;
    case TermKind::Tuple:
      os << '<';
      printArgs(t.args());
      os << '>';
      break;
  }
}

}  // namespace

std::string toString(const Term& t) {
  std::ostringstream os;
  print(os, t);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  print(os, t);
  return os;
}

Term toTerm(const Pattern& p) {
  switch (p.kind()) {
    case PatternKind::Var:
      return Term::var(p.name(), p.sort());
    case PatternKind::Constr:
    case PatternKind::Tuple: {
      std::vector<Term> args;
      args.reserve(p.arity());
      for (const auto& c : p.children()) args.push_back(toTerm(c));
      return p.is(PatternKind::Tuple) ? Term::tuple(std::move(args)) : Term::app(p.name(), std::move(args));
    }
    default:
      throw std::invalid_argument("not a constructor pattern: " + toString(p));
  }
}

Pattern toPattern(const Term& t) {
  if (t.is(TermKind::Var)) return Pattern::var(t.name(), t.sort());
  std::vector<Pattern> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(toPattern(a));
  return t.is(TermKind::Tuple) ? Pattern::tuple(std::move(args)) : Pattern::constr(t.name(), std::move(args));
}

Position Position::child(std::size_t i) const {
  Position p = *this;
  p.path.push_back(i);
  return p;
}

bool Position::isPrefixOf(const Position& other) const {
  return path.size() <= other.path.size() && std::equal(path.begin(), path.end(), other.path.begin());
}

std::string toString(const Position& pos) {
  std::string out = "ε";
  for (auto i : pos.path) out += "." + std::to_string(i);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Position& pos) { return os << toString(pos); }

namespace {

template <typename T>
const T& subtermAtImpl(const T& t, const Position& pos, auto childrenOf) {
  const T* cur = &t;
  for (auto i : pos.path) {
    auto kids = childrenOf(*cur);
    if (i == 0 || i > kids.size()) {
      throw InvalidPosition("invalid position " + toString(pos) + " in " + toString(t));
    }
    cur = &kids[i - 1];
  }
  return *cur;
}

template <typename T>
T substituteAtImpl(const T& t, std::span<const std::size_t> path, T replacement, auto childrenOf, auto rebuild,
                   const Position& full, const T& root) {
  if (path.empty()) return replacement;
  auto kids = childrenOf(t);
  const auto i = path.front();
  if (i == 0 || i > kids.size()) {
    throw InvalidPosition("invalid position " + toString(full) + " in " + toString(root));
  }
  std::vector<T> copy(kids.begin(), kids.end());
  copy[i - 1] = substituteAtImpl(copy[i - 1], path.subspan(1), std::move(replacement), childrenOf, rebuild, full, root);
  return rebuild(t, std::move(copy));
}

}  // namespace

const Term& subtermAt(const Term& t, const Position& pos) {
  return subtermAtImpl(t, pos, [](const Term& x) { return x.args(); });
}

Term substituteAt(const Term& t, const Position& pos, Term replacement) {
  return substituteAtImpl(
      t, std::span<const std::size_t>(pos.path), std::move(replacement), [](const Term& x) { return x.args(); },
      [](const Term& x, std::vector<Term> kids) { return x.withArgs(std::move(kids)); }, pos, t);
}

const Pattern& subtermAt(const Pattern& p, const Position& pos) {
  return subtermAtImpl(p, pos, [](const Pattern& x) { return x.children(); });
}

Pattern substituteAt(const Pattern& p, const Position& pos, Pattern replacement) {
  return substituteAtImpl(
      p, std::span<const std::size_t>(pos.path), std::move(replacement),
      [](const Pattern& x) { return x.children(); },
      [](const Pattern& x, std::vector<Pattern> kids) { return x.withChildren(std::move(kids)); }, pos, p);
}

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  auto walk = [&out](auto& self, const Term& s, Position pos) -> void {
    out.push_back(pos);
    for (std::size_t i = 0; i < s.arity(); ++i) self(self, s.arg(i), pos.child(i + 1));
  };
  walk(walk, t, Position{});
  return out;
}

const Term* Substitution::lookup(const std::string& name) const {
  auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (t.is(TermKind::Var)) {
    const Term* v = lookup(t.name());
    return v ? *v : t;
  }
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(apply(a));
  return t.withArgs(std::move(args));
}

std::string toString(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += name + "↦" + toString(value);
  }
  return out + "}";
}

}  // namespace patcomp
