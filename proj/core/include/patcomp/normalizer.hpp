#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "patcomp/fresh.hpp"
#include "patcomp/pattern.hpp"
#include "patcomp/signature.hpp"
#include "patcomp/term.hpp"

namespace patcomp {

/// Plain complements (no aliases) or complements producing as-patterns.
enum class Calculus { Complement, ComplementAs };

enum class RuleId { A1, A2, E1, E2, S1, S2, M1, M2, M3, M4, M5, M6, M7, M8, M9, M10 };

std::string_view ruleName(RuleId rule);

struct NormalizeConfig {
  bool cutUselessChoices = true;
  bool sortedEncoding = true;
  std::size_t maxSteps = 1'000'000;
};

class FuelExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidNormalForm : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Flattened result of a normalization: a list of (aliased) constructor
/// patterns; the empty list stands for _|_.
class NormalForm {
 public:
  NormalForm() = default;

  /// Flattens a normal-form pattern left to right, dropping alpha-equivalent
  /// duplicates. Throws InvalidNormalForm on anything but a sum of (aliased)
  /// constructor patterns.
  static NormalForm fromPattern(const Pattern& p);
  static NormalForm fromSummands(std::vector<Pattern> summands);

  const std::vector<Pattern>& summands() const { return summands_; }
  std::size_t size() const { return summands_.size(); }
  bool empty() const { return summands_.empty(); }

  /// p1 + ... + pn, or _|_.
  Pattern toPattern() const { return Pattern::sum(summands_); }

 private:
  std::vector<Pattern> summands_;
};

/// "p1 + p2 + ..." or "_|_".
std::string toString(const NormalForm& nf);

/// True when both forms have the same summands up to alpha-equivalence and order.
bool alphaEquivalent(const NormalForm& a, const NormalForm& b);

/// An innermost redex: every child of the node at `position` is irreducible.
/// `argument` is the 1-based argument index for E1/S1, 0 otherwise.
struct Redex {
  Position position;
  RuleId rule;
  std::size_t argument = 0;
};

class Normalizer {
 public:
  Normalizer(const Signature& sig, NormalizeConfig cfg = {}, Calculus calculus = Calculus::ComplementAs);

  /// Innermost normalization. p must be anti-free; for Complement also alias-free.
  NormalForm normalize(const Pattern& p, FreshNamer& fresh);
  Pattern reduce(const Pattern& p, FreshNamer& fresh);

  /// Innermost redexes of p, in pre-order, rules in priority order.
  std::vector<Redex> innermostRedexes(const Pattern& p) const;
  /// One rewrite step at an innermost redex.
  Pattern rewrite(const Pattern& p, const Redex& redex, FreshNamer& fresh);

  using RedexChooser = std::function<std::size_t(const std::vector<Redex>&)>;
  /// Repeatedly rewrites the redex picked by `choose` until none is left.
  NormalForm normalizeWith(const Pattern& p, FreshNamer& fresh, const RedexChooser& choose);

  const Signature& signature() const { return *sig_; }
  const NormalizeConfig& config() const { return cfg_; }
  Calculus calculus() const { return calculus_; }

  /// Rule applications since construction.
  std::size_t steps() const { return steps_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  using Choice = std::pair<RuleId, std::size_t>;

  std::vector<Choice> applicable(const Pattern& node) const;
  bool collect(const Pattern& p, const Position& pos, std::vector<Redex>& out) const;
  Pattern apply(const Pattern& node, Choice choice, FreshNamer& fresh);
  Pattern reduceRec(const Pattern& p, FreshNamer& fresh);
  Pattern settle(const Pattern& node, FreshNamer& fresh);
  void begin(const Pattern& p, FreshNamer& fresh);
  Pattern expandVariable(const Pattern& x, const Pattern& subtrahend, FreshNamer& fresh);
  Pattern splitApplication(const Pattern& left, const Pattern& right, FreshNamer& fresh);
  void checkInput(const Pattern& p) const;
  void tick();
  void warn(std::string message);

  const Signature* sig_;
  NormalizeConfig cfg_;
  Calculus calculus_;
  std::size_t steps_ = 0;
  std::size_t budget_ = 0;
  std::vector<std::string> warnings_;
};

/// Replaces every !q by z \ q with z fresh, innermost first; x@!q becomes x \ q.
/// Fresh variables take the sort of q (or of the enclosing argument position).
Pattern eliminateAnti(const Signature& sig, const Pattern& p, FreshNamer& fresh);

NormalForm normalizeRrC(const Signature& sig, const Pattern& p, const NormalizeConfig& cfg, FreshNamer& fresh);
NormalForm normalizeRrCat(const Signature& sig, const Pattern& p, const NormalizeConfig& cfg, FreshNamer& fresh);

}  // namespace patcomp
