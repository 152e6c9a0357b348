#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "patcomp/fresh.hpp"
#include "patcomp/normalizer.hpp"
#include "patcomp/oracle.hpp"
#include "patcomp/pattern.hpp"
#include "patcomp/signature.hpp"
#include "patcomp/term.hpp"

namespace patcomp {

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SubsumptionResult {
  bool subsumed = false;
  NormalForm residual;  // what p matches and none of ps does

  explicit operator bool() const { return subsumed; }
};

/// [[p]] included in [[p1]] u ... u [[pn]], decided by p \ (p1+...+pn) reducing to _|_.
/// Aliases are ignored and anti-patterns are eliminated first.
SubsumptionResult isSubsumed(const Signature& sig, const Pattern& p, const std::vector<Pattern>& ps,
                             const NormalizeConfig& cfg, FreshNamer& fresh);

/// 1-based indices i such that pi is subsumed by p1..p(i-1).
std::set<std::size_t> uselessIndices(const Signature& sig, const std::vector<Pattern>& ps,
                                     const NormalizeConfig& cfg, FreshNamer& fresh);

struct ExhaustivenessResult {
  bool exhaustive = true;
  std::vector<Pattern> witnesses;    // residual summands
  std::vector<Term> groundWitnesses;  // one smallest instance per residual summand
};

/// The shape of the values a list of patterns ranges over. Throws
/// ShapeMismatch on mixed tuple widths.
std::optional<ValueShape> commonShape(const Signature& sig, const std::vector<Pattern>& ps);

/// Checks that every value of the given shape (inferred when absent) is
/// matched by some pattern of ps.
ExhaustivenessResult checkExhaustive(const Signature& sig, const std::vector<Pattern>& ps, const NormalizeConfig& cfg,
                                     FreshNamer& fresh, std::optional<ValueShape> shape = std::nullopt);

/// Pi = pi \ (p1+...+p(i-1)) in normal form, one entry per pattern.
std::vector<NormalForm> disambiguate(const Signature& sig, const std::vector<Pattern>& ps,
                                     const NormalizeConfig& cfg, FreshNamer& fresh);

/// Instantiates every variable of a constructor pattern with the smallest
/// value of its sort; nothing when a sort cannot be determined.
std::optional<Term> groundInstance(const Signature& sig, const Pattern& p);

struct AnalysisReport {
  std::set<std::size_t> uselessIndices;
  bool exhaustive = true;
  std::vector<Pattern> witnesses;
  std::vector<Term> groundWitnesses;
};

AnalysisReport analyze(const Signature& sig, const std::vector<Pattern>& ps, const NormalizeConfig& cfg,
                       FreshNamer& fresh, std::optional<ValueShape> shape = std::nullopt);

}  // namespace patcomp
