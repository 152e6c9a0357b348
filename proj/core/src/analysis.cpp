#include "patcomp/analysis.hpp"

#include "patcomp/variables.hpp"

namespace patcomp {

namespace {

Pattern prepare(const Signature& sig, const Pattern& p, FreshNamer& fresh) {
  return stripAliases(eliminateAnti(sig, p, fresh));
}

Pattern sumApart(const Signature& sig, const std::vector<Pattern>& ps, std::size_t count, FreshNamer& fresh) {
  std::vector<Pattern> renamed;
  renamed.reserve(count);
  for (std::size_t i = 0; i < count; ++i) renamed.push_back(renameApart(prepare(sig, ps[i], fresh), fresh));
  return Pattern::sum(renamed);
}

NormalForm residualOf(const Signature& sig, const Pattern& p, const std::vector<Pattern>& ps, std::size_t count,
                      const NormalizeConfig& cfg, FreshNamer& fresh) {
  for (const auto& q : ps) fresh.reserve(q);
  fresh.reserve(p);
  Pattern left = prepare(sig, p, fresh);
  Pattern right = sumApart(sig, ps, count, fresh);
  return normalizeRrC(sig, Pattern::minus(left, right), cfg, fresh);
}

std::optional<Term> ground(const Signature& sig, const Pattern& p, const std::string& expected) {
  switch (p.kind()) {
    case PatternKind::Var: {
      const std::string& s = p.sort().empty() ? expected : p.sort();
      try {
        return smallestValue(sig, resolveSort(sig, s));
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
    case PatternKind::At:
      return ground(sig, p.body(), p.alias().sort().empty() ? expected : p.alias().sort());
    case PatternKind::Constr:
    case PatternKind::Tuple: {
      const SymbolDecl* decl = p.is(PatternKind::Constr) ? sig.findConstructor(p.name()) : nullptr;
      std::vector<Term> args;
      for (std::size_t i = 0; i < p.arity(); ++i) {
        std::string s = decl != nullptr && i < decl->arity() ? decl->argSorts[i] : std::string{};
        auto a = ground(sig, p.child(i), s);
        if (!a) return std::nullopt;
        args.push_back(std::move(*a));
      }
      return p.is(PatternKind::Constr) ? Term::app(p.name(), std::move(args)) : Term::tuple(std::move(args));
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

SubsumptionResult isSubsumed(const Signature& sig, const Pattern& p, const std::vector<Pattern>& ps,
                             const NormalizeConfig& cfg, FreshNamer& fresh) {
  SubsumptionResult r;
  r.residual = residualOf(sig, p, ps, ps.size(), cfg, fresh);
  r.subsumed = r.residual.empty();
  return r;
}

std::set<std::size_t> uselessIndices(const Signature& sig, const std::vector<Pattern>& ps,
                                     const NormalizeConfig& cfg, FreshNamer& fresh) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (residualOf(sig, ps[i], ps, i, cfg, fresh).empty()) out.insert(i + 1);
  }
  return out;
}

std::optional<ValueShape> commonShape(const Signature& sig, const std::vector<Pattern>& ps) {
  std::optional<ValueShape> shape;
  for (const auto& p : ps) {
    auto s = inferShape(sig, stripAliases(p));
    if (!s) continue;
    if (!shape) {
      shape = s;
      continue;
    }
    if (s->tuple != shape->tuple || s->sorts.size() != shape->sorts.size()) {
      throw ShapeMismatch("patterns of different shapes: " + toString(ps.front()) + " and " + toString(p));
    }
    for (std::size_t i = 0; i < s->sorts.size(); ++i) {
      if (shape->sorts[i].empty()) {
        shape->sorts[i] = s->sorts[i];
      } else if (!s->sorts[i].empty() && s->sorts[i] != shape->sorts[i]) {
        throw ShapeMismatch("sort " + s->sorts[i] + " where " + shape->sorts[i] + " is expected in " + toString(p));
      }
    }
  }
  return shape;
}

ExhaustivenessResult checkExhaustive(const Signature& sig, const std::vector<Pattern>& ps, const NormalizeConfig& cfg,
                                     FreshNamer& fresh, std::optional<ValueShape> shape) {
  if (!shape) shape = commonShape(sig, ps);
  for (const auto& q : ps) fresh.reserve(q);
  Pattern all = Pattern::bottom();
  if (!shape) {
    all = Pattern::var(fresh.fresh("x"));
  } else if (shape->tuple) {
    std::vector<Pattern> xs;
    for (const auto& s : shape->sorts) xs.push_back(Pattern::var(fresh.fresh("x"), s));
    all = Pattern::tuple(std::move(xs));
  } else {
    all = Pattern::var(fresh.fresh("x"), shape->sorts.at(0));
  }
  ExhaustivenessResult r;
  NormalForm residual = residualOf(sig, all, ps, ps.size(), cfg, fresh);
  r.exhaustive = residual.empty();
  r.witnesses = residual.summands();
  for (const auto& w : r.witnesses) {
    if (auto g = groundInstance(sig, w)) r.groundWitnesses.push_back(std::move(*g));
  }
  return r;
}

std::vector<NormalForm> disambiguate(const Signature& sig, const std::vector<Pattern>& ps,
                                     const NormalizeConfig& cfg, FreshNamer& fresh) {
  std::vector<NormalForm> out;
  out.reserve(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) out.push_back(residualOf(sig, ps[i], ps, i, cfg, fresh));
  return out;
}

std::optional<Term> groundInstance(const Signature& sig, const Pattern& p) { return ground(sig, p, {}); }

AnalysisReport analyze(const Signature& sig, const std::vector<Pattern>& ps, const NormalizeConfig& cfg,
                       FreshNamer& fresh, std::optional<ValueShape> shape) {
  AnalysisReport report;
  report.uselessIndices = uselessIndices(sig, ps, cfg, fresh);
  auto ex = checkExhaustive(sig, ps, cfg, fresh, std::move(shape));
  report.exhaustive = ex.exhaustive;
  report.witnesses = std::move(ex.witnesses);
  report.groundWitnesses = std::move(ex.groundWitnesses);
  return report;
}

}  // namespace patcomp
