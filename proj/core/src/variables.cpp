#include "patcomp/variables.hpp"

#include <algorithm>
#include <iterator>
#include <map>

namespace patcomp {

VarSet VarSet::unite(const VarSet& other) const {
  if (universal_ || other.universal_) return all();
  std::set<std::string> out = names_;
  out.insert(other.names_.begin(), other.names_.end());
  return VarSet(std::move(out));
}

VarSet VarSet::intersect(const VarSet& other) const {
  if (universal_) return other;
  if (other.universal_) return *this;
  std::set<std::string> out;
  std::set_intersection(names_.begin(), names_.end(), other.names_.begin(), other.names_.end(),
                        std::inserter(out, out.end()));
  return VarSet(std::move(out));
}

VarSet VarSet::minus(const VarSet& other) const {
  if (universal_) return *this;
  if (other.universal_) return VarSet();
  std::set<std::string> out;
  std::set_difference(names_.begin(), names_.end(), other.names_.begin(), other.names_.end(),
                      std::inserter(out, out.end()));
  return VarSet(std::move(out));
}

bool VarSet::subsetOf(const VarSet& other) const {
  if (other.universal_) return true;
  if (universal_) return false;
  return std::includes(other.names_.begin(), other.names_.end(), names_.begin(), names_.end());
}

std::string toString(const VarSet& s) {
  if (s.isUniversal()) return "ALL";
  std::string out = "{";
  bool first = true;
  for (const auto& n : s.names()) {
    if (!first) out += ",";
    first = false;
    out += n;
  }
  return out + "}";
}

std::set<std::string> vars(const Pattern& p) {
  std::set<std::string> out;
  auto walk = [&out](auto& self, const Pattern& q) -> void {
    if (q.is(PatternKind::Var)) out.insert(q.name());
    for (const auto& c : q.children()) self(self, c);
  };
  walk(walk, p);
  return out;
}

std::set<std::string> vars(const Term& t) {
  std::set<std::string> out;
  auto walk = [&out](auto& self, const Term& s) -> void {
    if (s.is(TermKind::Var)) out.insert(s.name());
    for (const auto& a : s.args()) self(self, a);
  };
  walk(walk, t);
  return out;
}

VarSet mvar(const Pattern& p) {
  switch (p.kind()) {
    case PatternKind::Var:
      return VarSet({p.name()});
    case PatternKind::Constr:
    case PatternKind::Tuple: {
      VarSet acc;
      for (const auto& c : p.children()) acc = acc.unite(mvar(c));
      return acc;
    }
    case PatternKind::Plus:
      return mvar(p.left()).intersect(mvar(p.right()));
    case PatternKind::Minus:
      return mvar(p.left());
    case PatternKind::Bottom:
      return VarSet::all();
    case PatternKind::At:
      return mvar(p.alias()).unite(mvar(p.body()));
    case PatternKind::Anti:
      throw AntiPresent("mvar: anti-pattern " + toString(p) + " must be eliminated first");
  }
  return {};
}

std::set<std::string> fvar(const Pattern& p) {
  const VarSet matchable = mvar(p);
  std::set<std::string> out;
  for (const auto& v : vars(p)) {
    if (!matchable.contains(v)) out.insert(v);
  }
  return out;
}

namespace {

using Occurrences = std::map<std::string, Position>;

// Returns the first occurrence of every variable, or the first clash found.
std::optional<LinearityViolation> collect(const Pattern& p, const Position& pos, Occurrences& out) {
  if (p.is(PatternKind::Var)) {
    out.emplace(p.name(), pos);
    return std::nullopt;
  }
  if (p.is(PatternKind::Plus)) {
    Occurrences left, right;
    if (auto v = collect(p.left(), pos.child(1), left)) return v;
    if (auto v = collect(p.right(), pos.child(2), right)) return v;
    left.insert(right.begin(), right.end());
    out = std::move(left);
    return std::nullopt;
  }
  Occurrences acc;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    Occurrences part;
    if (auto v = collect(p.child(i), pos.child(i + 1), part)) return v;
    for (auto& [name, where] : part) {
      auto [it, inserted] = acc.emplace(name, where);
      if (!inserted) return LinearityViolation{name, it->second, where};
    }
  }
  out = std::move(acc);
  return std::nullopt;
}

}  // namespace

std::optional<LinearityViolation> checkLinear(const Pattern& p) {
  Occurrences occ;
  return collect(p, Position{}, occ);
}

}  // namespace patcomp

namespace patcomp {

std::string inferSort(const Signature& sig, const Pattern& p) {
  switch (p.kind()) {
    case PatternKind::Var:
      return p.sort();
    case PatternKind::Constr:
      if (const auto* c = sig.findConstructor(p.name())) return c->resultSort;
      return {};
    case PatternKind::Plus:
    case PatternKind::Minus: {
      auto s = inferSort(sig, p.left());
      return s.empty() ? inferSort(sig, p.right()) : s;
    }
    case PatternKind::At: {
      const auto& s = p.alias().sort();
      return s.empty() ? inferSort(sig, p.body()) : s;
    }
    case PatternKind::Anti:
      return inferSort(sig, p.body());
    case PatternKind::Tuple:
    case PatternKind::Bottom:
      return {};
  }
  return {};
}

namespace {

Pattern renameWith(const Pattern& p, std::map<std::string, std::string>& names, FreshNamer& fresh) {
  if (p.is(PatternKind::Var)) {
    auto it = names.find(p.name());
    if (it == names.end()) it = names.emplace(p.name(), fresh.fresh(p.name())).first;
    return Pattern::var(it->second, p.sort());
  }
  if (p.arity() == 0) return p;
  std::vector<Pattern> kids;
  kids.reserve(p.arity());
  for (const auto& c : p.children()) kids.push_back(renameWith(c, names, fresh));
  return p.withChildren(std::move(kids));
}

}  // namespace

Pattern renameApart(const Pattern& p, FreshNamer& fresh) {
  std::map<std::string, std::string> names;
  return renameWith(p, names, fresh);
}

}  // namespace patcomp
