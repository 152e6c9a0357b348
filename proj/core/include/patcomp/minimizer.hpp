#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "patcomp/fresh.hpp"
#include "patcomp/normalizer.hpp"
#include "patcomp/pattern.hpp"
#include "patcomp/signature.hpp"

namespace patcomp {

/// Decides whether [[q]] is included in the union of [[others]].
using SubsumptionBackend = std::function<bool(const Pattern& q, const std::vector<Pattern>& others)>;

/// Residual test: q \ (others) normalizes to _|_. Each call uses its own namer
/// seeded with the signature.
SubsumptionBackend residualBackend(const Signature& sig, const NormalizeConfig& cfg);

struct MinimizeOptions {
  bool prefilter = true;   // drop patterns subsumed by a single other one
  bool seedKernel = true;  // start from the patterns no other set can replace
};

struct MinimizeStats {
  std::size_t inputSize = 0;
  std::size_t prefilteredSize = 0;
  std::size_t kernelSeedSize = 0;
  std::size_t outputSize = 0;
  std::size_t subsumptionCalls = 0;
};

struct MinimizeResult {
  std::vector<Pattern> patterns;  // in input order
  MinimizeStats stats;
};

/// Smallest valid subset of P (same semantics, fewest elements).
MinimizeResult minimum(const std::vector<Pattern>& P, const SubsumptionBackend& subsumed, MinimizeOptions options = {});
MinimizeResult minimum(const Signature& sig, const std::vector<Pattern>& P, const NormalizeConfig& cfg,
                       MinimizeOptions options = {});

/// Drops every pattern subsumed by one other remaining pattern, scanning in order.
std::vector<Pattern> prefilterSubsumedByOne(const std::vector<Pattern>& P, const SubsumptionBackend& subsumed);

/// Patterns not subsumed by the rest of P; they belong to every valid subset.
std::vector<Pattern> seedKernel(const std::vector<Pattern>& P, const SubsumptionBackend& subsumed);

}  // namespace patcomp
