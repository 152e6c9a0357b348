#include "patcomp/oracle.hpp"

#include <algorithm>
#include <iterator>

#include "patcomp/matching.hpp"
#include "patcomp/variables.hpp"

namespace patcomp {

namespace {

// Cartesian product of per-position candidate lists, lexicographic order.
template <typename Emit>
void product(const std::vector<const std::vector<Term>*>& lists, Emit emit) {
  for (const auto* l : lists) {
    if (l->empty()) return;
  }
  std::vector<std::size_t> idx(lists.size(), 0);
  std::vector<Term> current;
  while (true) {
    current.clear();
    for (std::size_t i = 0; i < lists.size(); ++i) current.push_back((*lists[i])[idx[i]]);
    emit(current);
    std::size_t k = lists.size();
    while (k > 0) {
      --k;
      if (++idx[k] < lists[k]->size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (lists.empty()) return;
  }
}

}  // namespace

bool GroundTermSet::contains(const Term& v) const { return std::find(terms.begin(), terms.end(), v) != terms.end(); }

std::string resolveSort(const Signature& sig, const std::string& sort) {
  if (!sort.empty()) return sort;
  if (sig.sorts().size() == 1) return sig.sorts().front();
  throw std::invalid_argument("cannot resolve the sort of a value in a many-sorted signature");
}

const std::vector<Term>& Universe::values(const std::string& sortName, int depth) {
  const std::string sort = resolveSort(*sig_, sortName);
  const auto key = std::make_pair(sort, depth);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  std::vector<Term> out;
  if (depth >= 1) {
    for (const auto* c : sig_->constructorsOf(sort)) {
      if (c->arity() == 0) {
        out.push_back(Term::app(c->name));
        continue;
      }
      if (depth < 2) continue;
      std::vector<const std::vector<Term>*> lists;
      for (const auto& argSort : c->argSorts) lists.push_back(&values(argSort, depth - 1));
      product(lists, [&](const std::vector<Term>& args) { out.push_back(Term::app(c->name, args)); });
    }
  }
  return cache_.emplace(key, std::move(out)).first->second;
}

std::vector<Term> Universe::values(const ValueShape& shape, int depth) {
  if (!shape.tuple) return values(shape.sorts.at(0), depth);
  std::vector<const std::vector<Term>*> lists;
  for (const auto& s : shape.sorts) lists.push_back(&values(s, depth));
  std::vector<Term> out;
  product(lists, [&](const std::vector<Term>& args) { out.push_back(Term::tuple(args)); });
  return out;
}

GroundTermSet enumerate(const Signature& sig, const std::string& sort, int depth) {
  if (depth < 1) throw std::invalid_argument("enumerate: depth must be >= 1");
  Universe u(sig);
  const auto& vals = u.values(sort, depth);
  if (vals.empty()) {
    throw EmptySort("sort '" + resolveSort(sig, sort) + "' has no value of height <= " + std::to_string(depth));
  }
  return {ValueShape::single(resolveSort(sig, sort)), depth, vals};
}

namespace {

std::optional<ValueShape> inferTupleShape(const Signature& sig, const Pattern& p) {
  switch (p.kind()) {
    case PatternKind::Tuple: {
      ValueShape shape{{}, true};
      for (const auto& c : p.children()) shape.sorts.push_back(inferSort(sig, c));
      return shape;
    }
    case PatternKind::Plus:
    case PatternKind::Minus: {
      auto s = inferTupleShape(sig, p.left());
      return s ? s : inferTupleShape(sig, p.right());
    }
    case PatternKind::At:
    case PatternKind::Anti:
      return inferTupleShape(sig, p.body());
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<ValueShape> inferShape(const Signature& sig, const Pattern& p) {
  if (auto tuple = inferTupleShape(sig, p)) {
    for (auto& s : tuple->sorts) {
      if (s.empty() && sig.sorts().size() == 1) s = sig.sorts().front();
      if (s.empty()) return std::nullopt;
    }
    return tuple;
  }
  auto s = inferSort(sig, p);
  if (s.empty() && sig.sorts().size() == 1) s = sig.sorts().front();
  if (s.empty()) return std::nullopt;
  return ValueShape::single(s);
}

namespace {

ValueShape requireShape(const Signature& sig, const Pattern& p) {
  auto shape = inferShape(sig, p);
  if (!shape) throw std::invalid_argument("cannot infer the value shape of " + toString(p));
  return *shape;
}

}  // namespace

GroundTermSet oracleSemantics(const Signature& sig, const Pattern& p, int depth) {
  return oracleSemantics(sig, p, depth, requireShape(sig, p));
}

GroundTermSet oracleSemantics(const Signature& sig, const Pattern& p, int depth, const ValueShape& shape) {
  Universe u(sig);
  GroundTermSet out{shape, depth, {}};
  for (const auto& v : u.values(shape, depth)) {
    if (matchExtended(p, v)) out.terms.push_back(v);
  }
  return out;
}

SemanticsComparison semanticsEqual(const Signature& sig, const Pattern& p, const Pattern& q, int depth) {
  auto shape = inferShape(sig, p);
  if (!shape) shape = inferShape(sig, q);
  if (!shape) throw std::invalid_argument("cannot infer the value shape of " + toString(p));
  return semanticsEqual(sig, p, q, depth, *shape);
}

SemanticsComparison semanticsEqual(const Signature& sig, const Pattern& p, const Pattern& q, int depth,
                                   const ValueShape& shape) {
  Universe u(sig);
  for (const auto& v : u.values(shape, depth)) {
    if (matchExtended(p, v) != matchExtended(q, v)) return {false, v};
  }
  return {true, std::nullopt};
}

namespace {

std::set<Term> evaluate(Universe& u, const Pattern& p, const std::string& sort, int depth) {
  const auto& sig = u.signature();
  auto universe = [&](const std::string& s) {
    const auto& vals = u.values(s, depth);
    return std::set<Term>(vals.begin(), vals.end());
  };
  switch (p.kind()) {
    case PatternKind::Var:
      return universe(p.sort().empty() ? sort : p.sort());
    case PatternKind::Constr: {
      const auto* c = sig.findConstructor(p.name());
      if (c == nullptr) throw std::invalid_argument("unknown constructor '" + p.name() + "'");
      if (depth < 1) return {};
      std::vector<std::vector<Term>> parts;
      for (std::size_t i = 0; i < p.arity(); ++i) {
        auto s = evaluate(u, p.child(i), c->argSorts[i], depth - 1);
        parts.emplace_back(s.begin(), s.end());
      }
      std::vector<const std::vector<Term>*> lists;
      for (const auto& part : parts) lists.push_back(&part);
      std::set<Term> out;
      product(lists, [&](const std::vector<Term>& args) { out.insert(Term::app(c->name, args)); });
      return out;
    }
    case PatternKind::Tuple:
      throw std::invalid_argument("tuple below the root of " + toString(p));
    case PatternKind::Plus: {
      auto out = evaluate(u, p.left(), sort, depth);
      auto right = evaluate(u, p.right(), sort, depth);
      out.insert(right.begin(), right.end());
      return out;
    }
    case PatternKind::Minus: {
      auto left = evaluate(u, p.left(), sort, depth);
      auto right = evaluate(u, p.right(), sort, depth);
      std::set<Term> out;
      std::set_difference(left.begin(), left.end(), right.begin(), right.end(), std::inserter(out, out.end()));
      return out;
    }
    case PatternKind::Bottom:
      return {};
    case PatternKind::At:
      return evaluate(u, p.body(), sort, depth);
    case PatternKind::Anti: {
      auto all = universe(sort);
      auto inner = evaluate(u, p.body(), sort, depth);
      std::set<Term> out;
      std::set_difference(all.begin(), all.end(), inner.begin(), inner.end(), std::inserter(out, out.end()));
      return out;
    }
  }
  return {};
}

std::set<Term> evaluateTuple(Universe& u, const Pattern& p, const ValueShape& shape, int depth) {
  auto universe = [&] {
    auto vals = u.values(shape, depth);
    return std::set<Term>(vals.begin(), vals.end());
  };
  auto difference = [](const std::set<Term>& a, const std::set<Term>& b) {
    std::set<Term> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
  };
  switch (p.kind()) {
    case PatternKind::Var:
      return universe();
    case PatternKind::Tuple: {
      if (p.arity() != shape.sorts.size()) return {};
      std::vector<std::vector<Term>> parts;
      for (std::size_t i = 0; i < p.arity(); ++i) {
        auto s = evaluate(u, p.child(i), shape.sorts[i], depth);
        parts.emplace_back(s.begin(), s.end());
      }
      std::vector<const std::vector<Term>*> lists;
      for (const auto& part : parts) lists.push_back(&part);
      std::set<Term> out;
      product(lists, [&](const std::vector<Term>& args) { out.insert(Term::tuple(args)); });
      return out;
    }
    case PatternKind::Plus: {
      auto out = evaluateTuple(u, p.left(), shape, depth);
      auto right = evaluateTuple(u, p.right(), shape, depth);
      out.insert(right.begin(), right.end());
      return out;
    }
    case PatternKind::Minus:
      return difference(evaluateTuple(u, p.left(), shape, depth), evaluateTuple(u, p.right(), shape, depth));
    case PatternKind::At:
      return evaluateTuple(u, p.body(), shape, depth);
    case PatternKind::Anti:
      return difference(universe(), evaluateTuple(u, p.body(), shape, depth));
    case PatternKind::Bottom:
    case PatternKind::Constr:
      return {};
  }
  return {};
}

}  // namespace

std::set<Term> evaluateEquations(const Signature& sig, const Pattern& p, int depth, const ValueShape& shape) {
  Universe u(sig);
  if (shape.tuple) return evaluateTuple(u, p, shape, depth);
  return evaluate(u, p, shape.sorts.at(0), depth);
}

Term smallestValue(const Signature& sig, const std::string& sort) {
  Universe u(sig);
  // Any inhabited sort has a value no higher than the number of sorts + 1.
  const int limit = static_cast<int>(sig.sorts().size()) + 1;
  for (int d = 1; d <= limit; ++d) {
    const auto& vals = u.values(sort, d);
    if (!vals.empty()) return vals.front();
  }
  throw EmptySort("sort '" + resolveSort(sig, sort) + "' is uninhabited");
}

}  // namespace patcomp
