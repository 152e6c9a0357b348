#pragma once

#include <stdexcept>
#include <string>

#include "patcomp/analysis.hpp"
#include "patcomp/compiler.hpp"
#include "patcomp/normalizer.hpp"
#include "patcomp/signature.hpp"

namespace patcomp::io {

class NotPlain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sort and def declarations.
std::string emitSignature(const Signature& sig);
/// A complete problem file; parseProblem reads it back.
std::string emitNative(const RuleProgram& prog);
/// Just the rules, one "head(args) -> rhs" per line.
std::string emitRules(const RuleProgram& prog);
std::string emitNative(const NormalForm& nf);
/// "useless: rule 4; exhaustive: yes" or "...; exhaustive: no; witnesses: <a,a>".
std::string emitNative(const AnalysisReport& report);

/// "(VAR ...)\n(RULES\n  lhs -> rhs\n...)"; names outside [A-Za-z0-9_] are
/// rewritten injectively and the mapping is listed in a trailing COMMENT.
/// Throws NotPlain when an lhs is not a plain constructor pattern.
std::string emitTPDB(const RuleProgram& prog);

/// ' -> _p, other characters outside [A-Za-z0-9_] -> _xHH.
std::string sanitizeName(const std::string& name);

}  // namespace patcomp::io
