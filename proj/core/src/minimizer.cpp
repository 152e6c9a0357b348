#include "patcomp/minimizer.hpp"

#include "patcomp/analysis.hpp"

namespace patcomp {

SubsumptionBackend residualBackend(const Signature& sig, const NormalizeConfig& cfg) {
  return [&sig, cfg](const Pattern& q, const std::vector<Pattern>& others) {
    FreshNamer fresh;
    fresh.reserve(sig);
    return isSubsumed(sig, q, others, cfg, fresh).subsumed;
  };
}

namespace {

std::vector<Pattern> without(const std::vector<Pattern>& P, std::size_t skip) {
  std::vector<Pattern> out;
  out.reserve(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (i != skip) out.push_back(P[i]);
  }
  return out;
}

class Search {
 public:
  Search(const std::vector<Pattern>& candidates, const SubsumptionBackend& subsumed)
      : candidates_(candidates), subsumed_(subsumed) {}

  // Indices into candidates_ of a minimal valid subset, given that
  // candidates_[from..] are still undecided and `kernel` is kept.
  std::vector<std::size_t> run(std::size_t from, std::vector<std::size_t> kernel) {
    if (from == candidates_.size()) return kernel;
    std::vector<Pattern> others;
    for (std::size_t i = from + 1; i < candidates_.size(); ++i) others.push_back(candidates_[i]);
    for (auto k : kernel) others.push_back(candidates_[k]);
    auto keep = kernel;
    keep.push_back(from);
    if (!subsumed_(candidates_[from], others)) return run(from + 1, std::move(keep));
    auto kept = run(from + 1, std::move(keep));
    auto dropped = run(from + 1, std::move(kernel));
    return kept.size() < dropped.size() ? kept : dropped;
  }

 private:
  const std::vector<Pattern>& candidates_;
  const SubsumptionBackend& subsumed_;
};

}  // namespace

std::vector<Pattern> prefilterSubsumedByOne(const std::vector<Pattern>& P, const SubsumptionBackend& subsumed) {
  std::vector<bool> dropped(P.size(), false);
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = 0; j < P.size(); ++j) {
      if (i == j || dropped[j]) continue;
      if (subsumed(P[i], {P[j]})) {
        dropped[i] = true;
        break;
      }
    }
  }
  std::vector<Pattern> out;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (!dropped[i]) out.push_back(P[i]);
  }
  return out;
}

std::vector<Pattern> seedKernel(const std::vector<Pattern>& P, const SubsumptionBackend& subsumed) {
  std::vector<Pattern> out;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (!subsumed(P[i], without(P, i))) out.push_back(P[i]);
  }
  return out;
}

MinimizeResult minimum(const std::vector<Pattern>& P, const SubsumptionBackend& subsumed, MinimizeOptions options) {
  MinimizeResult result;
  auto& stats = result.stats;
  stats.inputSize = P.size();
  SubsumptionBackend counted = [&](const Pattern& q, const std::vector<Pattern>& others) {
    ++stats.subsumptionCalls;
    return subsumed(q, others);
  };

  std::vector<Pattern> work = options.prefilter ? prefilterSubsumedByOne(P, counted) : P;
  stats.prefilteredSize = work.size();

  // Kernel members first, then the undecided ones; both in input order.
  std::vector<bool> inKernel(work.size(), false);
  if (options.seedKernel) {
    for (std::size_t i = 0; i < work.size(); ++i) inKernel[i] = !counted(work[i], without(work, i));
  }
  std::vector<Pattern> ordered;
  std::vector<std::size_t> kernel;
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (inKernel[i]) {
      kernel.push_back(ordered.size());
      ordered.push_back(work[i]);
    }
  }
  stats.kernelSeedSize = kernel.size();
  const std::size_t from = ordered.size();
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!inKernel[i]) ordered.push_back(work[i]);
  }

  Search search(ordered, counted);
  auto chosen = search.run(from, kernel);

  std::vector<bool> keep(ordered.size(), false);
  for (auto c : chosen) keep[c] = true;
  // Map back to input order; a pattern may appear in P more than once.
  std::vector<bool> used(ordered.size(), false);
  for (const auto& p : P) {
    for (std::size_t k = 0; k < ordered.size(); ++k) {
      if (keep[k] && !used[k] && ordered[k].id() == p.id()) {
        used[k] = true;
        result.patterns.push_back(p);
        break;
      }
    }
  }
  stats.outputSize = result.patterns.size();
  return result;
}

MinimizeResult minimum(const Signature& sig, const std::vector<Pattern>& P, const NormalizeConfig& cfg,
                       MinimizeOptions options) {
  return minimum(P, residualBackend(sig, cfg), options);
}

}  // namespace patcomp
