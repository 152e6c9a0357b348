#include "patcomp/matching.hpp"

#include <algorithm>

#include "patcomp/variables.hpp"

namespace patcomp {

namespace {

bool sameHead(const Pattern& p, const Term& v) {
  if (p.is(PatternKind::Tuple)) return v.is(TermKind::Tuple) && v.arity() == p.arity();
  return v.is(TermKind::App) && v.name() == p.name() && v.arity() == p.arity();
}

bool matchInto(const Pattern& p, const Term& v, Substitution& sigma) {
  switch (p.kind()) {
    case PatternKind::Var:
      sigma.bind(p.name(), v);
      return true;
    case PatternKind::Constr:
    case PatternKind::Tuple:
      if (!sameHead(p, v)) return false;
      for (std::size_t i = 0; i < p.arity(); ++i) {
        if (!matchInto(p.child(i), v.arg(i), sigma)) return false;
      }
      return true;
    default:
      throw std::invalid_argument("match: not a constructor pattern: " + toString(p));
  }
}

void dedupe(std::vector<Substitution>& out) {
  std::vector<Substitution> unique;
  for (auto& s : out) {
    if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(std::move(s));
  }
  out = std::move(unique);
}

}  // namespace

std::optional<Substitution> match(const Pattern& p, const Term& v) {
  Substitution sigma;
  if (!matchInto(p, v, sigma)) return std::nullopt;
  return sigma;
}

bool matchExtended(const Pattern& p, const Term& v) {
  switch (p.kind()) {
    case PatternKind::Var:
      return true;
    case PatternKind::Constr:
    case PatternKind::Tuple:
      if (!sameHead(p, v)) return false;
      for (std::size_t i = 0; i < p.arity(); ++i) {
        if (!matchExtended(p.child(i), v.arg(i))) return false;
      }
      return true;
    case PatternKind::Plus:
      return matchExtended(p.left(), v) || matchExtended(p.right(), v);
    case PatternKind::Minus:
      return matchExtended(p.left(), v) && !matchExtended(p.right(), v);
    case PatternKind::Bottom:
      return false;
    case PatternKind::At:
      return matchExtended(p.body(), v);
    case PatternKind::Anti:
      throw AntiPresent("matchExtended: anti-pattern " + toString(p) + " must be eliminated first");
  }
  return false;
}

std::vector<Substitution> matchBindings(const Pattern& p, const Term& v) {
  switch (p.kind()) {
    case PatternKind::Var: {
      Substitution s;
      s.bind(p.name(), v);
      return {s};
    }
    case PatternKind::Constr:
    case PatternKind::Tuple: {
      if (!sameHead(p, v)) return {};
      std::vector<Substitution> acc{Substitution{}};
      for (std::size_t i = 0; i < p.arity(); ++i) {
        auto part = matchBindings(p.child(i), v.arg(i));
        if (part.empty()) return {};
        std::vector<Substitution> next;
        for (const auto& a : acc) {
          for (const auto& b : part) {
            Substitution merged = a;
            for (const auto& [name, value] : b.bindings()) merged.bind(name, value);
            next.push_back(std::move(merged));
          }
        }
        acc = std::move(next);
      }
      dedupe(acc);
      return acc;
    }
    case PatternKind::Plus: {
      auto out = matchBindings(p.left(), v);
      auto right = matchBindings(p.right(), v);
      out.insert(out.end(), right.begin(), right.end());
      // Only variables bound by both alternatives are matchable.
      const VarSet keep = mvar(p);
      for (auto& s : out) {
        Substitution restricted;
        for (const auto& [name, value] : s.bindings()) {
          if (keep.contains(name)) restricted.bind(name, value);
        }
        s = std::move(restricted);
      }
      dedupe(out);
      return out;
    }
    case PatternKind::Minus:
      if (matchExtended(p.right(), v)) return {};
      return matchBindings(p.left(), v);
    case PatternKind::Bottom:
      return {};
    case PatternKind::At: {
      auto out = matchBindings(p.body(), v);
      for (auto& s : out) s.bind(p.alias().name(), v);
      return out;
    }
    case PatternKind::Anti:
      throw AntiPresent("matchBindings: anti-pattern " + toString(p) + " must be eliminated first");
  }
  return {};
}

}  // namespace patcomp
