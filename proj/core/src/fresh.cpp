#include "patcomp/fresh.hpp"

namespace patcomp {

void FreshNamer::reserve(const Pattern& p) {
  if (p.is(PatternKind::Var)) reserve(p.name());
  for (const auto& c : p.children()) reserve(c);
}

void FreshNamer::reserve(const Term& t) {
  if (t.is(TermKind::Var)) reserve(t.name());
  for (const auto& a : t.args()) reserve(a);
}

void FreshNamer::reserve(const Signature& sig) {
  for (const auto& c : sig.constructors()) reserve(c.name);
  for (const auto& d : sig.defined()) reserve(d.name);
}

std::string FreshNamer::fresh(std::string_view hint) {
  auto& counter = counters_[std::string(hint)];
  std::string name;
  do {
    name = std::string(hint) + std::to_string(++counter);
  } while (used_.count(name) != 0);
  used_.insert(name);
  ++issued_;
  return name;
}

}  // namespace patcomp
