#include "patcomp/normalizer.hpp"

#include <set>
#include <stdexcept>

#include "patcomp/variables.hpp"

namespace patcomp {

std::string_view ruleName(RuleId rule) {
  switch (rule) {
    case RuleId::A1: return "A1";
    case RuleId::A2: return "A2";
    case RuleId::E1: return "E1";
    case RuleId::E2: return "E2";
    case RuleId::S1: return "S1";
    case RuleId::S2: return "S2";
    case RuleId::M1: return "M1";
    case RuleId::M2: return "M2";
    case RuleId::M3: return "M3";
    case RuleId::M4: return "M4";
    case RuleId::M5: return "M5";
    case RuleId::M6: return "M6";
    case RuleId::M7: return "M7";
    case RuleId::M8: return "M8";
    case RuleId::M9: return "M9";
    case RuleId::M10: return "M10";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// NormalForm

namespace {

void flatten(const Pattern& p, std::vector<Pattern>& out) {
  if (p.is(PatternKind::Plus)) {
    flatten(p.left(), out);
    flatten(p.right(), out);
  } else {
    out.push_back(p);
  }
}

void checkSummand(const Pattern& p) {
  switch (p.kind()) {
    case PatternKind::Var:
      return;
    case PatternKind::Constr:
    case PatternKind::Tuple:
      for (const auto& c : p.children()) checkSummand(c);
      return;
    case PatternKind::At:
      checkSummand(p.body());
      return;
    default:
      throw InvalidNormalForm("not an aliased constructor pattern: " + toString(p));
  }
}

}  // namespace

NormalForm NormalForm::fromPattern(const Pattern& p) {
  if (p.is(PatternKind::Bottom)) return {};
  std::vector<Pattern> summands;
  flatten(p, summands);
  return fromSummands(std::move(summands));
}

NormalForm NormalForm::fromSummands(std::vector<Pattern> summands) {
  NormalForm nf;
  std::set<Pattern> seen;
  for (auto& s : summands) {
    checkSummand(s);
    if (seen.insert(canonicalize(s)).second) nf.summands_.push_back(std::move(s));
  }
  return nf;
}

std::string toString(const NormalForm& nf) { return toString(nf.toPattern()); }

bool alphaEquivalent(const NormalForm& a, const NormalForm& b) {
  std::set<Pattern> ca, cb;
  for (const auto& s : a.summands()) ca.insert(canonicalize(s));
  for (const auto& s : b.summands()) cb.insert(canonicalize(s));
  return ca == cb;
}

// ---------------------------------------------------------------------------
// Normalizer

Normalizer::Normalizer(const Signature& sig, NormalizeConfig cfg, Calculus calculus)
    : sig_(&sig), cfg_(cfg), calculus_(calculus) {
  if (cfg_.maxSteps == 0) throw std::invalid_argument("maxSteps must be positive");
}

void Normalizer::tick() {
  if (++steps_ > budget_) {
    throw FuelExhausted("normalization exceeded " + std::to_string(cfg_.maxSteps) + " steps");
  }
}

void Normalizer::warn(std::string message) {
  for (const auto& w : warnings_) {
    if (w == message) return;
  }
  warnings_.push_back(std::move(message));
}

void Normalizer::checkInput(const Pattern& p) const {
  if (p.contains(PatternKind::Anti)) throw AntiPresent("anti-pattern left in " + toString(p));
  if (calculus_ == Calculus::Complement && p.contains(PatternKind::At)) {
    throw std::invalid_argument("aliases need the as-pattern calculus: " + toString(p));
  }
}

void Normalizer::begin(const Pattern& p, FreshNamer& fresh) {
  checkInput(p);
  fresh.reserve(p);
  fresh.reserve(*sig_);
  budget_ = steps_ + cfg_.maxSteps;
}

std::vector<Normalizer::Choice> Normalizer::applicable(const Pattern& node) const {
  std::vector<Choice> out;
  switch (node.kind()) {
    case PatternKind::Plus:
      if (node.left().is(PatternKind::Bottom)) out.emplace_back(RuleId::A1, 0);
      if (node.right().is(PatternKind::Bottom)) out.emplace_back(RuleId::A2, 0);
      break;
    case PatternKind::Constr:
    case PatternKind::Tuple:
      for (std::size_t i = 0; i < node.arity(); ++i) {
        if (node.child(i).is(PatternKind::Bottom)) out.emplace_back(RuleId::E1, i + 1);
      }
      for (std::size_t i = 0; i < node.arity(); ++i) {
        if (node.child(i).is(PatternKind::Plus)) out.emplace_back(RuleId::S1, i + 1);
      }
      break;
    case PatternKind::At:
      if (node.body().is(PatternKind::Bottom)) out.emplace_back(RuleId::E2, 0);
      if (node.body().is(PatternKind::Plus)) out.emplace_back(RuleId::S2, 0);
      break;
    case PatternKind::Minus: {
      const auto& l = node.left();
      const auto& r = node.right();
      if (r.is(PatternKind::Var)) out.emplace_back(RuleId::M1, 0);
      if (r.is(PatternKind::Bottom)) out.emplace_back(RuleId::M2, 0);
      if (r.is(PatternKind::Plus)) out.emplace_back(RuleId::M3, 0);
      if (r.is(PatternKind::At)) out.emplace_back(RuleId::M10, 0);
      if (l.is(PatternKind::At)) out.emplace_back(RuleId::M9, 0);
      if (r.isApplication()) {
        if (l.is(PatternKind::Var)) out.emplace_back(RuleId::M6, 0);
        if (l.is(PatternKind::Bottom)) out.emplace_back(RuleId::M4, 0);
        if (l.is(PatternKind::Plus)) out.emplace_back(RuleId::M5, 0);
        if (l.isApplication()) {
          bool same = l.kind() == r.kind() && l.name() == r.name() && l.arity() == r.arity();
          out.emplace_back(same ? RuleId::M7 : RuleId::M8, 0);
        }
      }
      break;
    }
    default:
      break;
  }
  return out;
}

Pattern Normalizer::expandVariable(const Pattern& x, const Pattern& subtrahend, FreshNamer& fresh) {
  std::vector<Pattern> alternatives;
  if (subtrahend.is(PatternKind::Tuple)) {
    std::vector<Pattern> zs;
    for (const auto& c : subtrahend.children()) zs.push_back(Pattern::var(fresh.fresh(x.name()), inferSort(*sig_, c)));
    alternatives.push_back(Pattern::tuple(std::move(zs)));
  } else {
    std::vector<const SymbolDecl*> candidates;
    if (cfg_.sortedEncoding) {
      std::string sort = x.sort().empty() ? inferSort(*sig_, subtrahend) : x.sort();
      if (!sort.empty() && sig_->hasSort(sort)) {
        candidates = sig_->constructorsOf(sort);
      } else if (sig_->isSorted()) {
        warn("UnknownSort: no sort for variable " + x.name() + ", expanding over all constructors");
      }
    }
    if (candidates.empty()) {
      for (const auto& c : sig_->constructors()) candidates.push_back(&c);
    }
    for (const auto* c : candidates) {
      std::vector<Pattern> zs;
      for (const auto& s : c->argSorts) zs.push_back(Pattern::var(fresh.fresh(x.name()), s));
      alternatives.push_back(Pattern::constr(c->name, std::move(zs)));
    }
  }
  Pattern diff = Pattern::minus(Pattern::sum(alternatives), subtrahend);
  return calculus_ == Calculus::ComplementAs ? Pattern::at(x, diff) : diff;
}

Pattern Normalizer::splitApplication(const Pattern& left, const Pattern& right, FreshNamer& fresh) {
  const std::size_t n = left.arity();
  if (n == 0) return Pattern::bottom();
  std::vector<Pattern> parts;
  parts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Pattern d = Pattern::minus(left.child(k), right.child(k));
    if (cfg_.cutUselessChoices) {
      d = reduceRec(d, fresh);
      if (alphaEqual(d, left.child(k))) return left;
    }
    parts.push_back(std::move(d));
  }
  std::vector<Pattern> summands;
  summands.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Pattern> args(left.children().begin(), left.children().end());
    args[k] = parts[k];
    summands.push_back(left.withChildren(std::move(args)));
  }
  return Pattern::sum(summands);
}

Pattern Normalizer::apply(const Pattern& node, Choice choice, FreshNamer& fresh) {
  const auto [rule, arg] = choice;
  switch (rule) {
    case RuleId::A1:
      return node.right();
    case RuleId::A2:
      return node.left();
    case RuleId::E1:
    case RuleId::E2:
    case RuleId::M1:
    case RuleId::M4:
      return Pattern::bottom();
    case RuleId::S1: {
      const auto& sum = node.child(arg - 1);
      std::vector<Pattern> l(node.children().begin(), node.children().end());
      std::vector<Pattern> r = l;
      l[arg - 1] = sum.left();
      r[arg - 1] = sum.right();
      return Pattern::plus(node.withChildren(std::move(l)), node.withChildren(std::move(r)));
    }
    case RuleId::S2:
      return Pattern::plus(Pattern::at(node.alias(), node.body().left()),
                           Pattern::at(node.alias(), node.body().right()));
    case RuleId::M2:
    case RuleId::M8:
      return node.left();
    case RuleId::M3:
      return Pattern::minus(Pattern::minus(node.left(), node.right().left()), node.right().right());
    case RuleId::M5:
      return Pattern::plus(Pattern::minus(node.left().left(), node.right()),
                           Pattern::minus(node.left().right(), node.right()));
    case RuleId::M6:
      return expandVariable(node.left(), node.right(), fresh);
    case RuleId::M7:
      return splitApplication(node.left(), node.right(), fresh);
    case RuleId::M9:
      return Pattern::at(node.left().alias(), Pattern::minus(node.left().body(), node.right()));
    case RuleId::M10:
      return Pattern::minus(node.left(), node.right().body());
  }
  throw std::logic_error("unknown rule");
}

Pattern Normalizer::reduceRec(const Pattern& p, FreshNamer& fresh) {
  if (p.arity() == 0) return p;
  std::vector<Pattern> kids;
  kids.reserve(p.arity());
  bool changed = false;
  for (const auto& c : p.children()) {
    kids.push_back(reduceRec(c, fresh));
    changed = changed || kids.back().id() != c.id();
  }
  return settle(changed ? p.withChildren(std::move(kids)) : p, fresh);
}

Pattern Normalizer::settle(const Pattern& node, FreshNamer& fresh) {
  auto choices = applicable(node);
  if (choices.empty()) return node;
  tick();
  return reduceRec(apply(node, choices.front(), fresh), fresh);
}

Pattern Normalizer::reduce(const Pattern& p, FreshNamer& fresh) {
  begin(p, fresh);
  return reduceRec(p, fresh);
}

NormalForm Normalizer::normalize(const Pattern& p, FreshNamer& fresh) {
  return NormalForm::fromPattern(reduce(p, fresh));
}

bool Normalizer::collect(const Pattern& p, const Position& pos, std::vector<Redex>& out) const {
  bool inner = false;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    inner = collect(p.child(i), pos.child(i + 1), out) || inner;
  }
  if (inner) return true;
  auto choices = applicable(p);
  for (const auto& [rule, arg] : choices) out.push_back(Redex{pos, rule, arg});
  return !choices.empty();
}

std::vector<Redex> Normalizer::innermostRedexes(const Pattern& p) const {
  std::vector<Redex> out;
  collect(p, Position{}, out);
  return out;
}

Pattern Normalizer::rewrite(const Pattern& p, const Redex& redex, FreshNamer& fresh) {
  const Pattern& node = subtermAt(p, redex.position);
  return substituteAt(p, redex.position, apply(node, {redex.rule, redex.argument}, fresh));
}

NormalForm Normalizer::normalizeWith(const Pattern& p, FreshNamer& fresh, const RedexChooser& choose) {
  begin(p, fresh);
  Pattern current = p;
  for (;;) {
    auto redexes = innermostRedexes(current);
    if (redexes.empty()) break;
    std::size_t pick = choose(redexes);
    if (pick >= redexes.size()) throw std::out_of_range("redex chooser returned an invalid index");
    tick();
    current = rewrite(current, redexes[pick], fresh);
  }
  return NormalForm::fromPattern(current);
}

// ---------------------------------------------------------------------------
// Anti-patterns

namespace {

Pattern elimAnti(const Signature& sig, const Pattern& p, FreshNamer& fresh, const std::string& expected) {
  switch (p.kind()) {
    case PatternKind::Var:
    case PatternKind::Bottom:
      return p;
    case PatternKind::Constr: {
      if (p.arity() == 0) return p;
      const auto* decl = sig.findConstructor(p.name());
      std::vector<Pattern> kids;
      for (std::size_t i = 0; i < p.arity(); ++i) {
        std::string s = decl != nullptr && i < decl->arity() ? decl->argSorts[i] : std::string{};
        kids.push_back(elimAnti(sig, p.child(i), fresh, s));
      }
      return p.withChildren(std::move(kids));
    }
    case PatternKind::Tuple: {
      std::vector<Pattern> kids;
      for (const auto& c : p.children()) kids.push_back(elimAnti(sig, c, fresh, {}));
      return p.withChildren(std::move(kids));
    }
    case PatternKind::Plus:
    case PatternKind::Minus:
      return p.withChildren({elimAnti(sig, p.left(), fresh, expected), elimAnti(sig, p.right(), fresh, expected)});
    case PatternKind::At: {
      const auto& x = p.alias();
      std::string s = x.sort().empty() ? expected : x.sort();
      if (p.body().is(PatternKind::Anti)) {
        return Pattern::minus(x, elimAnti(sig, p.body().body(), fresh, s));
      }
      return Pattern::at(x, elimAnti(sig, p.body(), fresh, s));
    }
    case PatternKind::Anti: {
      Pattern q = elimAnti(sig, p.body(), fresh, expected);
      std::string s = inferSort(sig, q);
      if (s.empty()) s = expected;
      return Pattern::minus(Pattern::var(fresh.fresh(), s), q);
    }
  }
  return p;
}

}  // namespace

Pattern eliminateAnti(const Signature& sig, const Pattern& p, FreshNamer& fresh) {
  if (!p.contains(PatternKind::Anti)) return p;
  fresh.reserve(p);
  fresh.reserve(sig);
  return elimAnti(sig, p, fresh, {});
}

NormalForm normalizeRrC(const Signature& sig, const Pattern& p, const NormalizeConfig& cfg, FreshNamer& fresh) {
  Normalizer n(sig, cfg, Calculus::Complement);
  return n.normalize(p, fresh);
}

NormalForm normalizeRrCat(const Signature& sig, const Pattern& p, const NormalizeConfig& cfg, FreshNamer& fresh) {
  Normalizer n(sig, cfg, Calculus::ComplementAs);
  return n.normalize(p, fresh);
}

}  // namespace patcomp
