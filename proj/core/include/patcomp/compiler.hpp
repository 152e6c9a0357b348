#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "patcomp/fresh.hpp"
#include "patcomp/minimizer.hpp"
#include "patcomp/normalizer.hpp"
#include "patcomp/pattern.hpp"
#include "patcomp/signature.hpp"
#include "patcomp/term.hpp"

namespace patcomp {

enum class ProgramMode { Ordered, Set };

/// head(lhs1, ..., lhsn) -> rhs
struct ExtendedRule {
  std::string head;
  std::vector<Pattern> lhs;
  Term rhs = Term::var("_");
  std::size_t source = 0;  // 1-based index of the rule it was derived from

  /// <lhs1, ..., lhsn>
  Pattern argsPattern() const { return Pattern::tuple(lhs); }
};

struct RuleProgram {
  Signature signature;
  ProgramMode mode = ProgramMode::Ordered;
  std::vector<ExtendedRule> rules;
};

std::string toString(const ExtendedRule& rule);

struct Violation {
  std::size_t rule = 0;  // 1-based
  std::string message;
};

std::string toString(const Violation& v);

/// Well-formedness of every rule: declared head and arity, argument sorts,
/// joint linearity, no _|_, rhs variables matchable, well-formed rhs.
std::vector<Violation> validate(const RuleProgram& prog);

/// True when every lhs consists of plain constructor patterns.
bool isPlain(const RuleProgram& prog);

struct CompileOptions {
  NormalizeConfig normalize;
  bool minimize = false;  // minimize each source rule's summands
  MinimizeOptions minimizeOptions;
};

/// Each rule replaced in place by one rule per summand of its normalized lhs.
RuleProgram trComp(const RuleProgram& prog, const CompileOptions& opts, FreshNamer& fresh);
/// Aliases removed innermost first, x@q turning into q with x := q in the rhs.
RuleProgram trAt(const RuleProgram& prog);
/// Order removed: rule i keeps only what no earlier rule with the same head matches.
RuleProgram trOrd(const RuleProgram& prog, const CompileOptions& opts, FreshNamer& fresh);
RuleProgram trAll(const RuleProgram& prog, const CompileOptions& opts, FreshNamer& fresh);
RuleProgram trOrder(const RuleProgram& prog, const CompileOptions& opts, FreshNamer& fresh);

/// Removes rules alpha-equivalent to an earlier one (lhs and rhs together).
std::vector<ExtendedRule> dedupeRules(std::vector<ExtendedRule> rules);

struct Step {
  Position position;
  std::size_t rule = 0;  // 1-based index in the program
  Term result;

  friend bool operator==(const Step&, const Step&) = default;
};

/// Reference interpreter of the one-step relation. A redex is a defined
/// symbol applied to values; a rule fires when the values are in the
/// semantics of its instantiated lhs (and, when ordered, of no earlier lhs).
class Stepper {
 public:
  Stepper(const RuleProgram& prog, bool ordered);

  std::vector<Step> step(const Term& t) const;

 private:
  struct Prepared {
    std::string head;
    Pattern args;
    Term rhs;
  };

  void stepAt(const Term& t, const Term& redex, const Position& pos, std::vector<Step>& out) const;

  const Signature* sig_;
  bool ordered_;
  std::vector<Prepared> rules_;
};

std::vector<Step> stepOrdered(const RuleProgram& prog, const Term& t);
std::vector<Step> stepSet(const RuleProgram& prog, const Term& t);

}  // namespace patcomp
