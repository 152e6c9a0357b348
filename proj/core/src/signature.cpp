#include "patcomp/signature.hpp"

#include <algorithm>

namespace patcomp {

Signature Signature::monoSorted(const std::vector<std::pair<std::string, std::size_t>>& constructors) {
  Signature sig;
  const std::string sort(kImplicitSort);
  sig.addSort(sort);
  for (const auto& [name, arity] : constructors) {
    sig.addConstructor(name, std::vector<std::string>(arity, sort), sort);
  }
  return sig;
}

void Signature::addSort(std::string name) {
  if (hasSort(name)) {
    throw SignatureError("duplicate sort '" + name + "'");
  }
  sorts_.push_back(std::move(name));
}

void Signature::requireFresh(const std::string& name) const {
  if (isSymbol(name)) {
    throw SignatureError("duplicate symbol '" + name + "'");
  }
}

void Signature::addConstructor(std::string name, std::vector<std::string> argSorts, std::string resultSort) {
  requireFresh(name);
  constructorIndex_.emplace(name, constructors_.size());
  constructors_.push_back({std::move(name), std::move(argSorts), std::move(resultSort)});
}

void Signature::addDefined(std::string name, std::vector<std::string> argSorts, std::string resultSort) {
  requireFresh(name);
  definedIndex_.emplace(name, defined_.size());
  defined_.push_back({std::move(name), std::move(argSorts), std::move(resultSort)});
}

bool Signature::hasSort(std::string_view sort) const {
  return std::find(sorts_.begin(), sorts_.end(), sort) != sorts_.end();
}

const SymbolDecl* Signature::findConstructor(std::string_view name) const {
  auto it = constructorIndex_.find(name);
  return it == constructorIndex_.end() ? nullptr : &constructors_[it->second];
}

const SymbolDecl* Signature::findDefined(std::string_view name) const {
  auto it = definedIndex_.find(name);
  return it == definedIndex_.end() ? nullptr : &defined_[it->second];
}

std::vector<const SymbolDecl*> Signature::constructorsOf(std::string_view sort) const {
  std::vector<const SymbolDecl*> out;
  for (const auto& c : constructors_) {
    if (c.resultSort == sort) out.push_back(&c);
  }
  return out;
}

void Signature::check() const {
  auto requireSort = [&](const std::string& sort, const SymbolDecl& decl) {
    if (!hasSort(sort)) {
      throw SignatureError("symbol '" + decl.name + "' mentions undeclared sort '" + sort + "'");
    }
  };
  for (const auto* table : {&constructors_, &defined_}) {
    for (const auto& decl : *table) {
      requireSort(decl.resultSort, decl);
      for (const auto& s : decl.argSorts) requireSort(s, decl);
    }
  }
  for (const auto& sort : sorts_) {
    if (constructorsOf(sort).empty()) {
      throw SignatureError("sort '" + sort + "' has no constructor");
    }
  }
}

}  // namespace patcomp
