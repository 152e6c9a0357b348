#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "patcomp/analysis.hpp"
#include "patcomp/compiler.hpp"
#include "patcomp/io/parser.hpp"
#include "patcomp/minimizer.hpp"
#include "patcomp/normalizer.hpp"

namespace {

using namespace patcomp;

io::Problem corpus(const std::string& name) {
  std::ifstream in(std::string(PATCOMP_CORPUS_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return io::parseProblem(os.str());
}

Signature abf() { return Signature::monoSorted({{"a", 0}, {"b", 0}, {"f", 2}}); }

// z_n \ (... (z_1 \ f(a,b) \ f(f(b,v),b)) ...), n = range(0).
Pattern nestedComplement(const Signature& sig, int n) {
  std::string text = "z1 \\ f(a,b) \\ f(f(b,v),b)";
  for (int i = 2; i <= n; ++i) text = "z" + std::to_string(i) + " \\ (" + text + ")";
  return io::parsePattern(sig, text);
}

void BM_NormalizeNestedComplement(benchmark::State& state) {
  auto sig = abf();
  auto p = nestedComplement(sig, static_cast<int>(state.range(0)));
  NormalizeConfig cfg;
  cfg.cutUselessChoices = state.range(1) != 0;
  std::size_t steps = 0;
  for (auto _ : state) {
    FreshNamer fresh;
    Normalizer n(sig, cfg);
    benchmark::DoNotOptimize(n.normalize(p, fresh));
    steps = n.steps();
  }
  state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_NormalizeNestedComplement)->ArgsProduct({{1, 2, 3}, {1}})->Args({1, 0})->Args({2, 0});

void BM_TrOrderEco(benchmark::State& state) {
  auto prog = corpus("eco.pat").program;
  CompileOptions opts;
  opts.minimize = state.range(0) != 0;
  std::size_t rules = 0;
  for (auto _ : state) {
    FreshNamer fresh;
    auto out = trOrder(prog, opts, fresh);
    rules = out.rules.size();
    benchmark::DoNotOptimize(out);
  }
  state.counters["rules"] = static_cast<double>(rules);
}
BENCHMARK(BM_TrOrderEco)->Arg(0)->Arg(1);

void BM_MinimizeRedundantRule(benchmark::State& state) {
  auto sig = abf();
  NormalizeConfig off;
  off.cutUselessChoices = false;
  FreshNamer fresh;
  auto p = eliminateAnti(sig, io::parsePattern(sig, "f(x,!a) \\ f(b,a)"), fresh);
  auto summands = normalizeRrC(sig, p, off, fresh).summands();
  MinimizeOptions options{state.range(0) != 0, state.range(0) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(minimum(sig, summands, {}, options));
}
BENCHMARK(BM_MinimizeRedundantRule)->Arg(0)->Arg(1);

void BM_CheckExhaustive(benchmark::State& state) {
  auto sig = abf();
  std::vector<Pattern> ps;
  for (auto text : {"<b,y>", "<a,b>", "<f(x,y),z>", "<a,a>"}) ps.push_back(io::parsePattern(sig, text));
  for (auto _ : state) {
    FreshNamer fresh;
    benchmark::DoNotOptimize(checkExhaustive(sig, ps, {}, fresh));
  }
}
BENCHMARK(BM_CheckExhaustive);

}  // namespace

BENCHMARK_MAIN();
