#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "patcomp/pattern.hpp"
#include "patcomp/signature.hpp"
#include "patcomp/term.hpp"

namespace patcomp {

/// Supplies variable names that never collide with reserved ones. Threaded
/// explicitly through every transformation that introduces variables; two
/// namers with the same reservations and request sequence agree.
class FreshNamer {
 public:
  explicit FreshNamer(std::string prefix = "z") : prefix_(std::move(prefix)) {}

  void reserve(std::string_view name) { used_.emplace(name); }
  void reserve(const Pattern& p);
  void reserve(const Term& t);
  void reserve(const Signature& sig);

  bool isReserved(std::string_view name) const { return used_.count(std::string(name)) != 0; }

  /// prefix1, prefix2, ...
  std::string fresh() { return fresh(prefix_); }
  /// hint1, hint2, ... (first unused).
  std::string fresh(std::string_view hint);

  const std::string& prefix() const { return prefix_; }
  std::size_t issued() const { return issued_; }

 private:
  std::string prefix_;
  std::set<std::string, std::less<>> used_;
  std::map<std::string, std::size_t, std::less<>> counters_;
  std::size_t issued_ = 0;
};

}  // namespace patcomp
