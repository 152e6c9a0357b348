#include "patcomp/pattern.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace patcomp {

struct Pattern::Node {
  PatternKind kind;
  std::string name;
  std::string sort;
  std::vector<Pattern> children;
};

namespace {

const std::string& emptyString() {
  static const std::string empty;
  return empty;
}

}  // namespace

Pattern Pattern::var(std::string name, std::string sort) {
  return Pattern(std::make_shared<const Node>(Node{PatternKind::Var, std::move(name), std::move(sort), {}}));
}

Pattern Pattern::constr(std::string symbol, std::vector<Pattern> args) {
  return Pattern(std::make_shared<const Node>(Node{PatternKind::Constr, std::move(symbol), {}, std::move(args)}));
}

Pattern Pattern::tuple(std::vector<Pattern> args) {
  return Pattern(std::make_shared<const Node>(Node{PatternKind::Tuple, {}, {}, std::move(args)}));
}

Pattern Pattern::plus(Pattern left, Pattern right) {
  return Pattern(std::make_shared<const Node>(
      Node{PatternKind::Plus, {}, {}, {std::move(left), std::move(right)}}));
}

Pattern Pattern::minus(Pattern left, Pattern right) {
  return Pattern(std::make_shared<const Node>(
      Node{PatternKind::Minus, {}, {}, {std::move(left), std::move(right)}}));
}

Pattern Pattern::bottom() {
  static const Pattern bot(std::make_shared<const Node>(Node{PatternKind::Bottom, {}, {}, {}}));
  return bot;
}

Pattern Pattern::at(Pattern alias, Pattern body) {
  if (!alias.is(PatternKind::Var)) {
    throw std::invalid_argument("alias must be a variable, got " + toString(alias));
  }
  return Pattern(std::make_shared<const Node>(
      Node{PatternKind::At, {}, {}, {std::move(alias), std::move(body)}}));
}

Pattern Pattern::anti(Pattern body) {
  return Pattern(std::make_shared<const Node>(Node{PatternKind::Anti, {}, {}, {std::move(body)}}));
}

Pattern Pattern::sum(std::span<const Pattern> summands) {
  if (summands.empty()) return bottom();
  Pattern acc = summands.front();
  for (const auto& s : summands.subspan(1)) acc = plus(acc, s);
  return acc;
}

PatternKind Pattern::kind() const { return node_->kind; }

const std::string& Pattern::name() const { return node_->name; }

const std::string& Pattern::sort() const {
  return is(PatternKind::Var) ? node_->sort : emptyString();
}

std::span<const Pattern> Pattern::children() const { return node_->children; }

Pattern Pattern::withChildren(std::vector<Pattern> children) const {
  if (children.size() != node_->children.size()) {
    throw std::invalid_argument("withChildren: arity mismatch");
  }
  return Pattern(std::make_shared<const Node>(Node{node_->kind, node_->name, node_->sort, std::move(children)}));
}

Pattern Pattern::withSort(std::string sort) const {
  return Pattern(std::make_shared<const Node>(Node{node_->kind, node_->name, std::move(sort), node_->children}));
}

std::size_t Pattern::size() const {
  std::size_t n = 1;
  for (const auto& c : children()) n += c.size();
  return n;
}

std::size_t Pattern::height() const {
  switch (kind()) {
    case PatternKind::Constr:
    case PatternKind::Tuple: {
      std::size_t h = 0;
      for (const auto& c : children()) h = std::max(h, c.height());
      return h + 1;
    }
    case PatternKind::Plus:
    case PatternKind::Minus:
      return std::max(left().height(), right().height());
    case PatternKind::At:
    case PatternKind::Anti:
      return body().height();
    case PatternKind::Var:
    case PatternKind::Bottom:
      return 1;
  }
  return 1;
}

bool Pattern::contains(PatternKind k) const {
  if (kind() == k) return true;
  return std::any_of(children().begin(), children().end(), [k](const Pattern& c) { return c.contains(k); });
}

bool Pattern::isConstructorPattern() const {
  switch (kind()) {
    case PatternKind::Var:
      return true;
    case PatternKind::Constr:
    case PatternKind::Tuple:
      return std::all_of(children().begin(), children().end(),
                         [](const Pattern& c) { return c.isConstructorPattern(); });
    default:
      return false;
  }
}

bool operator==(const Pattern& a, const Pattern& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = a.child(i) <=> b.child(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

// Binding strength: sums bind loosest, complements next, everything else is atomic.
int level(const Pattern& p) {
  switch (p.kind()) {
    case PatternKind::Plus:
      return 1;
    case PatternKind::Minus:
      return 2;
    default:
      return 3;
  }
}

void print(std::ostream& os, const Pattern& p, int minLevel);

void printArgs(std::ostream& os, std::span<const Pattern> args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) os << ',';
    print(os, args[i], 1);
  }
}

void print(std::ostream& os, const Pattern& p, int minLevel) {
  const bool paren = level(p) < minLevel;
  if (paren) os << '(';
  switch (p.kind()) {
    case PatternKind::Var:
      os << p.name();
      break;
    case PatternKind::Constr:
      os << p.name();
      if (p.arity() > 0) {
        os << '(';
        printArgs(os, p.children());
        os << ')';
      }
      break;
    case PatternKind::Tuple:
      os << '<';
      printArgs(os, p.children());
      os << '>';
      break;
    case PatternKind::Plus:
      print(os, p.left(), 1);
      os << " + ";
      print(os, p.right(), 2);
      break;
    case PatternKind::Minus:
      print(os, p.left(), 2);
      os << " \\ ";
      print(os, p.right(), 3);
      break;
    case PatternKind::Bottom:
      os << "_|_";
      break;
    case PatternKind::At:
      os << p.alias().name() << '@';
      // A bare anti-pattern body reads fine; other non-atomic bodies need parentheses.
      print(os, p.body(), 3);
      break;
    case PatternKind::Anti:
      os << '!';
      if (p.body().is(PatternKind::At)) {
        os << '(';
        print(os, p.body(), 1);
        os << ')';
      } else {
        print(os, p.body(), 3);
      }
      break;
  }
  if (paren) os << ')';
}

Pattern renameVars(const Pattern& p, std::map<std::string, std::string>& names) {
  if (p.is(PatternKind::Var)) {
    auto [it, inserted] = names.try_emplace(p.name(), "_" + std::to_string(names.size()));
    return Pattern::var(it->second, p.sort());
  }
  if (p.arity() == 0) return p;
  std::vector<Pattern> kids;
  kids.reserve(p.arity());
  for (const auto& c : p.children()) kids.push_back(renameVars(c, names));
  return p.withChildren(std::move(kids));
}

}  // namespace

std::string toString(const Pattern& p) {
  std::ostringstream os;
  print(os, p, 1);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Pattern& p) {
  print(os, p, 1);
  return os;
}

Pattern canonicalize(const Pattern& p) {
  std::map<std::string, std::string> names;
  return renameVars(p, names);
}

bool alphaEqual(const Pattern& a, const Pattern& b) { return canonicalize(a) == canonicalize(b); }

Pattern stripAliases(const Pattern& p) {
  if (p.is(PatternKind::At)) return stripAliases(p.body());
  if (p.arity() == 0) return p;
  std::vector<Pattern> kids;
  kids.reserve(p.arity());
  for (const auto& c : p.children()) kids.push_back(stripAliases(c));
  return p.withChildren(std::move(kids));
}

}  // namespace patcomp
