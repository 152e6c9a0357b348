#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace patcomp {

/// Name of the sort every constructor gets when a signature declares none.
inline constexpr std::string_view kImplicitSort = "U";

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SymbolDecl {
  std::string name;
  std::vector<std::string> argSorts;
  std::string resultSort;

  std::size_t arity() const { return argSorts.size(); }
};

/// Many-sorted signature: constructors C, defined symbols D and the tuple
/// arities in use. Symbol names are unique across C and D.
class Signature {
 public:
  Signature() = default;

  /// Mono-sorted helper: every constructor lives in the implicit sort "U".
  static Signature monoSorted(const std::vector<std::pair<std::string, std::size_t>>& constructors);

  void addSort(std::string name);
  void addConstructor(std::string name, std::vector<std::string> argSorts, std::string resultSort);
  void addDefined(std::string name, std::vector<std::string> argSorts, std::string resultSort);
  void registerTuple(std::size_t arity) { tupleArities_.insert(arity); }

  /// Throws SignatureError when a sort is undeclared or has no constructor.
  void check() const;

  const std::vector<std::string>& sorts() const { return sorts_; }
  const std::vector<SymbolDecl>& constructors() const { return constructors_; }
  const std::vector<SymbolDecl>& defined() const { return defined_; }
  const std::set<std::size_t>& tupleArities() const { return tupleArities_; }

  bool hasSort(std::string_view sort) const;
  bool isSorted() const { return sorts_.size() > 1; }
  const SymbolDecl* findConstructor(std::string_view name) const;
  const SymbolDecl* findDefined(std::string_view name) const;
  bool isSymbol(std::string_view name) const {
    return findConstructor(name) != nullptr || findDefined(name) != nullptr;
  }

  /// Constructors of `sort` in declaration order.
  std::vector<const SymbolDecl*> constructorsOf(std::string_view sort) const;

 private:
  void requireFresh(const std::string& name) const;

  std::vector<std::string> sorts_;
  std::vector<SymbolDecl> constructors_;
  std::vector<SymbolDecl> defined_;
  std::map<std::string, std::size_t, std::less<>> constructorIndex_;
  std::map<std::string, std::size_t, std::less<>> definedIndex_;
  std::set<std::size_t> tupleArities_;
};

}  // namespace patcomp
