#include "patcomp/io/printer.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace patcomp::io {

std::string emitSignature(const Signature& sig) {
  std::ostringstream os;
  for (const auto& sort : sig.sorts()) {
    os << "sort " << sort << " =";
    bool first = true;
    for (const auto* c : sig.constructorsOf(sort)) {
      os << (first ? " " : " | ") << c->name;
      first = false;
      if (c->arity() > 0) {
        os << '(';
        for (std::size_t i = 0; i < c->arity(); ++i) os << (i ? "," : "") << c->argSorts[i];
        os << ')';
      }
    }
    os << ";\n";
  }
  for (const auto& d : sig.defined()) {
    os << "def " << d.name << " : ";
    for (std::size_t i = 0; i < d.arity(); ++i) os << (i ? "," : "") << d.argSorts[i];
    os << " -> " << d.resultSort << ";\n";
  }
  return os.str();
}

std::string emitRules(const RuleProgram& prog) {
  std::string out;
  for (const auto& r : prog.rules) out += toString(r) + "\n";
  return out;
}

std::string emitNative(const RuleProgram& prog) {
  std::ostringstream os;
  os << emitSignature(prog.signature);
  if (!prog.rules.empty()) {
    os << "rules " << (prog.mode == ProgramMode::Ordered ? "ordered" : "set") << '\n';
    for (const auto& r : prog.rules) os << "  " << toString(r) << ";\n";
  }
  return os.str();
}

std::string emitNative(const NormalForm& nf) { return toString(nf); }

std::string emitNative(const AnalysisReport& report) {
  std::ostringstream os;
  os << "useless: ";
  if (report.uselessIndices.empty()) {
    os << "none";
  } else {
    os << (report.uselessIndices.size() == 1 ? "rule " : "rules ");
    bool first = true;
    for (auto i : report.uselessIndices) {
      os << (first ? "" : ", ") << i;
      first = false;
    }
  }
  os << "; exhaustive: " << (report.exhaustive ? "yes" : "no");
  if (!report.exhaustive) {
    os << "; witnesses: ";
    for (std::size_t i = 0; i < report.witnesses.size(); ++i) os << (i ? ", " : "") << report.witnesses[i];
  }
  return os.str();
}

std::string sanitizeName(const std::string& name) {
  std::string out;
  for (char ch : name) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) != 0 || c == '_') {
      out += ch;
    } else if (c == '\'') {
      out += "_p";
    } else {
      char buf[8];
      std::snprintf(buf, sizeof buf, "_x%02X", c);
      out += buf;
    }
  }
  return out;
}

namespace {

class Names {
 public:
  explicit Names(const RuleProgram& prog) {
    std::vector<std::string> all;
    for (const auto& c : prog.signature.constructors()) all.push_back(c.name);
    for (const auto& d : prog.signature.defined()) all.push_back(d.name);
    for (const auto& r : prog.rules) {
      for (const auto& p : r.lhs) collect(p, all);
    }
    for (const auto& n : all) taken_.insert(n);
    for (const auto& n : all) {
      if (map_.count(n) != 0) continue;
      std::string s = sanitizeName(n);
      if (s == n) {
        map_[n] = n;
        continue;
      }
      std::string candidate = s;
      for (std::size_t k = 1; taken_.count(candidate) != 0; ++k) candidate = s + "_" + std::to_string(k);
      taken_.insert(candidate);
      map_[n] = candidate;
      renamed_.emplace_back(candidate, n);
    }
  }

  const std::string& operator()(const std::string& n) const { return map_.at(n); }
  const std::vector<std::pair<std::string, std::string>>& renamed() const { return renamed_; }

 private:
  static void collect(const Pattern& p, std::vector<std::string>& out) {
    if (p.is(PatternKind::Var)) out.push_back(p.name());
    for (const auto& c : p.children()) collect(c, out);
  }

  std::set<std::string> taken_;
  std::map<std::string, std::string> map_;
  std::vector<std::pair<std::string, std::string>> renamed_;
};

void printPattern(std::ostream& os, const Pattern& p, const Names& names) {
  os << names(p.name());
  if (p.arity() > 0) {
    os << '(';
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (i) os << ',';
      printPattern(os, p.child(i), names);
    }
    os << ')';
  }
}

void printTerm(std::ostream& os, const Term& t, const Names& names) {
  os << names(t.name());
  if (t.arity() > 0) {
    os << '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i) os << ',';
      printTerm(os, t.arg(i), names);
    }
    os << ')';
  }
}

void collectVars(const Pattern& p, std::vector<std::string>& order, std::set<std::string>& seen) {
  if (p.is(PatternKind::Var) && seen.insert(p.name()).second) order.push_back(p.name());
  for (const auto& c : p.children()) collectVars(c, order, seen);
}

}  // namespace

std::string emitTPDB(const RuleProgram& prog) {
  for (const auto& r : prog.rules) {
    for (const auto& p : r.lhs) {
      if (!p.isConstructorPattern() || p.contains(PatternKind::Tuple)) {
        throw NotPlain("not a plain constructor rule: " + toString(r));
      }
    }
  }
  std::vector<const ExtendedRule*> rules;
  for (const auto& r : prog.rules) rules.push_back(&r);
  if (prog.mode == ProgramMode::Set) {
    std::stable_sort(rules.begin(), rules.end(),
                     [](const ExtendedRule* a, const ExtendedRule* b) { return a->source < b->source; });
  }
  const Names names(prog);
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (const auto* r : rules) {
    for (const auto& p : r->lhs) collectVars(p, vars, seen);
  }
  std::ostringstream os;
  os << "(VAR";
  for (const auto& v : vars) os << ' ' << names(v);
  if (vars.empty()) os << ' ';
  os << ")\n(RULES\n";
  for (const auto* r : rules) {
    os << "  ";
    printPattern(os, Pattern::constr(r->head, r->lhs), names);
    os << " -> ";
    printTerm(os, r->rhs, names);
    os << '\n';
  }
  os << ')';
  if (!names.renamed().empty()) {
    os << "\n(COMMENT";
    for (const auto& [to, from] : names.renamed()) os << ' ' << to << " = " << from << ';';
    os << ')';
  }
  return os.str();
}

}  // namespace patcomp::io
