#pragma once

#include <optional>
#include <vector>

#include "patcomp/pattern.hpp"
#include "patcomp/term.hpp"

namespace patcomp {

/// Instance relation for constructor patterns: returns sigma with
/// dom(sigma) = vars(p) and sigma(p) = v, or nothing.
std::optional<Substitution> match(const Pattern& p, const Term& v);

/// v in [[p]] for an anti-free extended pattern. x@p matches what p matches.
bool matchExtended(const Pattern& p, const Term& v);

/// Every substitution sigma over the matchable variables that the extended
/// pattern can bind while accepting v (v in [[sigma(p)]]). Complement
/// right-hand sides are tested semantically, their variables stay free.
/// Several results are possible when alternatives of a sum bind differently.
std::vector<Substitution> matchBindings(const Pattern& p, const Term& v);

}  // namespace patcomp
