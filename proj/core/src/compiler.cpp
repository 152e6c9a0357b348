#include "patcomp/compiler.hpp"

#include <set>
#include <sstream>

#include "patcomp/matching.hpp"
#include "patcomp/variables.hpp"

namespace patcomp {

std::string toString(const ExtendedRule& rule) {
  std::ostringstream os;
  os << rule.head << '(';
  for (std::size_t i = 0; i < rule.lhs.size(); ++i) {
    if (i > 0) os << ',';
    os << rule.lhs[i];
  }
  os << ") -> " << rule.rhs;
  return os.str();
}

std::string toString(const Violation& v) { return "rule " + std::to_string(v.rule) + ": " + v.message; }

// ---------------------------------------------------------------------------
// Validation

namespace {

class RuleChecker {
 public:
  RuleChecker(const Signature& sig, std::size_t index, std::vector<Violation>& out)
      : sig_(sig), index_(index), out_(out) {}

  void pattern(const Pattern& p, const std::string& expected) {
    switch (p.kind()) {
      case PatternKind::Var:
        if (!p.sort().empty() && !expected.empty() && p.sort() != expected) {
          report("variable " + p.name() + " of sort " + p.sort() + " where " + expected + " is expected");
        }
        return;
      case PatternKind::Constr: {
        const auto* c = sig_.findConstructor(p.name());
        if (c == nullptr) {
          report(sig_.findDefined(p.name()) != nullptr ? "defined symbol " + p.name() + " in a pattern"
                                                       : "unknown constructor " + p.name());
          return;
        }
        if (c->arity() != p.arity()) {
          report(p.name() + " expects " + std::to_string(c->arity()) + " arguments, got " +
                 std::to_string(p.arity()));
          return;
        }
        if (!expected.empty() && c->resultSort != expected) {
          report(p.name() + " has sort " + c->resultSort + " where " + expected + " is expected");
        }
        for (std::size_t i = 0; i < p.arity(); ++i) pattern(p.child(i), c->argSorts[i]);
        return;
      }
      case PatternKind::Tuple:
        report("tuple inside a rule argument: " + toString(p));
        return;
      case PatternKind::Plus:
      case PatternKind::Minus:
        pattern(p.left(), expected);
        pattern(p.right(), expected);
        return;
      case PatternKind::Bottom:
        report("_|_ in a left-hand side");
        return;
      case PatternKind::At:
        pattern(p.alias(), expected);
        pattern(p.body(), expected);
        return;
      case PatternKind::Anti:
        pattern(p.body(), expected);
        return;
    }
  }

  void term(const Term& t, const std::string& expected, const VarSet& bound) {
    switch (t.kind()) {
      case TermKind::Var:
        if (!bound.contains(t.name())) report("unbound rhs variable " + t.name());
        if (!t.sort().empty() && !expected.empty() && t.sort() != expected) {
          report("variable " + t.name() + " of sort " + t.sort() + " where " + expected + " is expected");
        }
        return;
      case TermKind::Tuple:
        report("tuple in a right-hand side");
        return;
      case TermKind::App: {
        const auto* d = sig_.findConstructor(t.name());
        if (d == nullptr) d = sig_.findDefined(t.name());
        if (d == nullptr) {
          report("unknown symbol " + t.name() + " in the right-hand side");
          return;
        }
        if (d->arity() != t.arity()) {
          report(t.name() + " expects " + std::to_string(d->arity()) + " arguments, got " +
                 std::to_string(t.arity()));
          return;
        }
        if (!expected.empty() && d->resultSort != expected) {
          report(t.name() + " has sort " + d->resultSort + " where " + expected + " is expected");
        }
        for (std::size_t i = 0; i < t.arity(); ++i) term(t.arg(i), d->argSorts[i], bound);
        return;
      }
    }
  }

  void report(std::string message) { out_.push_back({index_, std::move(message)}); }

 private:
  const Signature& sig_;
  std::size_t index_;
  std::vector<Violation>& out_;
};

Pattern desugar(const Signature& sig, const std::vector<Pattern>& lhs, FreshNamer& fresh) {
  std::vector<Pattern> args;
  args.reserve(lhs.size());
  for (const auto& p : lhs) args.push_back(eliminateAnti(sig, p, fresh));
  return Pattern::tuple(std::move(args));
}

void reserveProgram(const RuleProgram& prog, FreshNamer& fresh) {
  fresh.reserve(prog.signature);
  for (const auto& r : prog.rules) {
    for (const auto& p : r.lhs) fresh.reserve(p);
    fresh.reserve(r.rhs);
  }
}

std::size_t sourceOf(const ExtendedRule& r, std::size_t position) { return r.source != 0 ? r.source : position; }

}  // namespace

std::vector<Violation> validate(const RuleProgram& prog) {
  std::vector<Violation> out;
  const auto& sig = prog.signature;
  for (std::size_t i = 0; i < prog.rules.size(); ++i) {
    const auto& rule = prog.rules[i];
    RuleChecker check(sig, i + 1, out);
    const auto* head = sig.findDefined(rule.head);
    if (head == nullptr) {
      check.report("undeclared defined symbol " + rule.head);
      continue;
    }
    if (head->arity() != rule.lhs.size()) {
      check.report(rule.head + " expects " + std::to_string(head->arity()) + " arguments, got " +
                   std::to_string(rule.lhs.size()));
      continue;
    }
    const std::size_t before = out.size();
    for (std::size_t k = 0; k < rule.lhs.size(); ++k) check.pattern(rule.lhs[k], head->argSorts[k]);
    if (auto lin = checkLinear(rule.argsPattern())) {
      check.report("variable " + lin->variable + " occurs twice (at " + toString(lin->first) + " and " +
                   toString(lin->second) + ")");
    }
    if (out.size() != before) continue;
    FreshNamer fresh;
    reserveProgram(prog, fresh);
    check.term(rule.rhs, head->resultSort, mvar(desugar(sig, rule.lhs, fresh)));
  }
  return out;
}

bool isPlain(const RuleProgram& prog) {
  for (const auto& r : prog.rules) {
    for (const auto& p : r.lhs) {
      if (!p.isConstructorPattern()) return false;
    }
  }
  return true;
}

std::vector<ExtendedRule> dedupeRules(std::vector<ExtendedRule> rules) {
  std::vector<ExtendedRule> out;
  std::set<Pattern> seen;
  for (auto& r : rules) {
    Pattern key = canonicalize(Pattern::tuple({Pattern::constr(r.head, r.lhs), toPattern(r.rhs)}));
    if (seen.insert(key).second) out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Transformations

namespace {

std::vector<Pattern> finishSummands(const Signature& sig, const NormalForm& nf, const CompileOptions& opts) {
  if (!opts.minimize || nf.size() < 2) return nf.summands();
  return minimum(sig, nf.summands(), opts.normalize, opts.minimizeOptions).patterns;
}

void emitSummands(const ExtendedRule& rule, std::size_t source, const std::vector<Pattern>& summands,
                  std::vector<ExtendedRule>& out) {
  for (const auto& s : summands) {
    ExtendedRule r;
    r.head = rule.head;
    r.lhs.assign(s.children().begin(), s.children().end());
    r.rhs = rule.rhs;
    r.source = source;
    out.push_back(std::move(r));
  }
}

Pattern removeAliases(const Pattern& p, std::vector<std::pair<std::string, Pattern>>& binds) {
  if (p.is(PatternKind::At)) {
    Pattern body = removeAliases(p.body(), binds);
    binds.emplace_back(p.alias().name(), body);
    return body;
  }
  if (p.arity() == 0) return p;
  std::vector<Pattern> kids;
  kids.reserve(p.arity());
  for (const auto& c : p.children()) kids.push_back(removeAliases(c, binds));
  return p.withChildren(std::move(kids));
}

}  // namespace

RuleProgram trComp(const RuleProgram& prog, const CompileOptions& opts, FreshNamer& fresh) {
  reserveProgram(prog, fresh);
  RuleProgram out{prog.signature, prog.mode, {}};
  Normalizer normalizer(prog.signature, opts.normalize, Calculus::ComplementAs);
  for (std::size_t i = 0; i < prog.rules.size(); ++i) {
    const auto& rule = prog.rules[i];
    NormalForm nf = normalizer.normalize(desugar(prog.signature, rule.lhs, fresh), fresh);
    emitSummands(rule, sourceOf(rule, i + 1), finishSummands(prog.signature, nf, opts), out.rules);
  }
  out.rules = dedupeRules(std::move(out.rules));
  return out;
}

RuleProgram trAt(const RuleProgram& prog) {
  RuleProgram out{prog.signature, prog.mode, {}};
  for (std::size_t i = 0; i < prog.rules.size(); ++i) {
    const auto& rule = prog.rules[i];
    std::vector<std::pair<std::string, Pattern>> binds;
    ExtendedRule r;
    r.head = rule.head;
    for (const auto& p : rule.lhs) r.lhs.push_back(removeAliases(p, binds));
    r.rhs = rule.rhs;
    for (const auto& [x, q] : binds) {
      Substitution s;
      s.bind(x, toTerm(q));
      r.rhs = s.apply(r.rhs);
    }
    r.source = sourceOf(rule, i + 1);
    out.rules.push_back(std::move(r));
  }
  out.rules = dedupeRules(std::move(out.rules));
  return out;
}

RuleProgram trOrd(const RuleProgram& prog, const CompileOptions& opts, FreshNamer& fresh) {
  reserveProgram(prog, fresh);
  RuleProgram out{prog.signature, ProgramMode::Set, {}};
  Normalizer normalizer(prog.signature, opts.normalize, Calculus::ComplementAs);
  std::vector<Pattern> desugared;
  for (const auto& rule : prog.rules) desugared.push_back(desugar(prog.signature, rule.lhs, fresh));
  for (std::size_t i = 0; i < prog.rules.size(); ++i) {
    const auto& rule = prog.rules[i];
    std::vector<Pattern> earlier;
    for (std::size_t j = 0; j < i; ++j) {
      if (prog.rules[j].head == rule.head) earlier.push_back(renameApart(desugared[j], fresh));
    }
    Pattern p = earlier.empty() ? desugared[i] : Pattern::minus(desugared[i], Pattern::sum(earlier));
    NormalForm nf = normalizer.normalize(p, fresh);
    emitSummands(rule, sourceOf(rule, i + 1), finishSummands(prog.signature, nf, opts), out.rules);
  }
  out.rules = dedupeRules(std::move(out.rules));
  return out;
}

RuleProgram trAll(const RuleProgram& prog, const CompileOptions& opts, FreshNamer& fresh) {
  return trAt(trComp(prog, opts, fresh));
}

RuleProgram trOrder(const RuleProgram& prog, const CompileOptions& opts, FreshNamer& fresh) {
  return trAt(trOrd(prog, opts, fresh));
}

// ---------------------------------------------------------------------------
// One-step relations

namespace {

bool isValue(const Signature& sig, const Term& t) {
  if (!t.is(TermKind::App) || sig.findConstructor(t.name()) == nullptr) return false;
  for (const auto& a : t.args()) {
    if (!isValue(sig, a)) return false;
  }
  return true;
}

}  // namespace

Stepper::Stepper(const RuleProgram& prog, bool ordered) : sig_(&prog.signature), ordered_(ordered) {
  FreshNamer fresh;
  reserveProgram(prog, fresh);
  for (const auto& r : prog.rules) rules_.push_back({r.head, desugar(prog.signature, r.lhs, fresh), r.rhs});
}

void Stepper::stepAt(const Term& t, const Term& redex, const Position& pos, std::vector<Step>& out) const {
  const Term values = Term::tuple({redex.args().begin(), redex.args().end()});
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& rule = rules_[i];
    if (rule.head != redex.name() || rule.args.arity() != redex.arity()) continue;
    if (!matchExtended(rule.args, values)) continue;
    for (const auto& sigma : matchBindings(rule.args, values)) {
      out.push_back({pos, i + 1, substituteAt(t, pos, sigma.apply(rule.rhs))});
    }
    if (ordered_) break;
  }
}

std::vector<Step> Stepper::step(const Term& t) const {
  std::vector<Step> out;
  for (const auto& pos : positions(t)) {
    const Term& s = subtermAt(t, pos);
    if (!s.is(TermKind::App) || sig_->findDefined(s.name()) == nullptr) continue;
    bool values = true;
    for (const auto& a : s.args()) values = values && isValue(*sig_, a);
    if (values) stepAt(t, s, pos, out);
  }
  return out;
}

std::vector<Step> stepOrdered(const RuleProgram& prog, const Term& t) { return Stepper(prog, true).step(t); }

std::vector<Step> stepSet(const RuleProgram& prog, const Term& t) { return Stepper(prog, false).step(t); }

}  // namespace patcomp
