#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "patcomp/compiler.hpp"
#include "patcomp/io/parser.hpp"
#include "patcomp/normalizer.hpp"
#include "patcomp/pattern.hpp"
#include "patcomp/signature.hpp"

namespace patcomp::testing {

/// C = {a, b, f/2}, the running example signature.
inline Signature abf() { return Signature::monoSorted({{"a", 0}, {"b", 0}, {"f", 2}}); }

inline Pattern pat(const Signature& sig, std::string_view text) { return io::parsePattern(sig, text); }

inline Term term(const Signature& sig, std::string_view text) { return io::parseTerm(sig, text); }

inline NormalForm nf(const Signature& sig, std::initializer_list<std::string_view> summands) {
  std::vector<Pattern> ps;
  for (auto s : summands) ps.push_back(pat(sig, s));
  return NormalForm::fromSummands(ps);
}

inline std::set<Pattern> canonicalSet(const std::vector<Pattern>& ps) {
  std::set<Pattern> out;
  for (const auto& p : ps) out.insert(canonicalize(p));
  return out;
}

#ifndef PATCOMP_CORPUS_DIR
#define PATCOMP_CORPUS_DIR "corpus"
#endif

inline std::string corpusText(const std::string& name) {
  std::ifstream in(std::string(PATCOMP_CORPUS_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing corpus file " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline io::Problem corpus(const std::string& name) { return io::parseProblem(corpusText(name)); }

/// Canonical key of a rule: lhs and rhs renamed together.
inline Pattern ruleKey(const ExtendedRule& r) {
  return canonicalize(Pattern::tuple({Pattern::constr(r.head, r.lhs), toPattern(r.rhs)}));
}

inline std::set<Pattern> ruleKeys(const RuleProgram& prog) {
  std::set<Pattern> out;
  for (const auto& r : prog.rules) out.insert(ruleKey(r));
  return out;
}

/// Parses "head(args) -> rhs" lines against a signature.
inline std::set<Pattern> ruleKeys(const Signature& sig, std::initializer_list<std::string_view> rules) {
  std::set<Pattern> out;
  for (auto text : rules) {
    auto arrow = text.find("->");
    auto lhs = pat(sig, "<" + std::string(text.substr(text.find('(') + 1, text.rfind(')', arrow) - text.find('(') - 1)) + ">");
    ExtendedRule r;
    r.head = std::string(text.substr(0, text.find('(')));
    r.lhs.assign(lhs.children().begin(), lhs.children().end());
    r.rhs = term(sig, text.substr(arrow + 2));
    out.insert(ruleKey(r));
  }
  return out;
}

}  // namespace patcomp::testing
