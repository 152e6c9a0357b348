#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "patcomp/analysis.hpp"
#include "patcomp/compiler.hpp"
#include "patcomp/io/parser.hpp"
#include "patcomp/io/printer.hpp"
#include "patcomp/minimizer.hpp"
#include "patcomp/normalizer.hpp"
#include "patcomp/oracle.hpp"

namespace patcomp::cli {
namespace {

struct Globals {
  bool noCut = false;
  bool noSorted = false;
  std::size_t fuel = 1'000'000;
  std::string prefix = "z";
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

NormalizeConfig configOf(const Globals& g) {
  NormalizeConfig cfg;
  cfg.cutUselessChoices = !g.noCut;
  cfg.sortedEncoding = !g.noSorted;
  cfg.maxSteps = g.fuel;
  return cfg;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FreshNamer namerFor(const Globals& g, const io::Problem& problem) {
  FreshNamer fresh(g.prefix);
  fresh.reserve(problem.program.signature);
  for (const auto& p : problem.patterns) fresh.reserve(p);
  for (const auto& r : problem.program.rules) {
    for (const auto& p : r.lhs) fresh.reserve(p);
    fresh.reserve(r.rhs);
  }
  return fresh;
}

// The patterns a command works on: the pattern directives, then one per rule.
struct Item {
  std::string label;
  Pattern pattern;
};

std::vector<Item> itemsOf(const io::Problem& problem) {
  std::vector<Item> items;
  for (std::size_t i = 0; i < problem.patterns.size(); ++i) {
    items.push_back({"pattern " + std::to_string(i + 1), problem.patterns[i]});
  }
  for (const auto& r : problem.program.rules) {
    Pattern p = r.lhs.size() == 1 ? r.lhs.front() : r.argsPattern();
    items.push_back({"rule " + std::to_string(r.source), p});
  }
  return items;
}

struct Group {
  std::string head;
  ValueShape shape;
  std::vector<std::size_t> sources;
  std::vector<Pattern> patterns;
};

// Rules grouped by defined symbol, or the pattern directives as one group.
std::vector<Group> groupsOf(const io::Problem& problem) {
  std::vector<Group> groups;
  if (!problem.hasRules) {
    Group g;
    for (std::size_t i = 0; i < problem.patterns.size(); ++i) {
      g.sources.push_back(i + 1);
      g.patterns.push_back(problem.patterns[i]);
    }
    auto shape = commonShape(problem.program.signature, g.patterns);
    if (!shape) throw InputError("cannot infer the sort of the patterns");
    g.shape = *shape;
    groups.push_back(std::move(g));
    return groups;
  }
  const auto& prog = problem.program;
  for (const auto& d : prog.signature.defined()) {
    Group g;
    g.head = d.name;
    g.shape = ValueShape::of(d.argSorts);
    for (const auto& r : prog.rules) {
      if (r.head != d.name) continue;
      g.sources.push_back(r.source);
      g.patterns.push_back(r.argsPattern());
    }
    if (!g.patterns.empty()) groups.push_back(std::move(g));
  }
  return groups;
}

NormalForm normalizeItem(const Signature& sig, const Pattern& p, const NormalizeConfig& cfg, FreshNamer& fresh,
                         bool as) {
  Pattern q = eliminateAnti(sig, p, fresh);
  if (as || q.contains(PatternKind::At)) return normalizeRrCat(sig, q, cfg, fresh);
  return normalizeRrC(sig, q, cfg, fresh);
}

std::string label(const Group& g, std::size_t groups) { return groups > 1 ? g.head + ": " : ""; }

int cmdNormalize(const Globals& g, const std::string& file, std::size_t which, bool as, std::ostream& out) {
  auto problem = io::parseProblem(readFile(file));
  auto items = itemsOf(problem);
  if (which > items.size()) {
    throw InputError("no pattern " + std::to_string(which) + " (the file has " + std::to_string(items.size()) + ")");
  }
  auto fresh = namerFor(g, problem);
  const auto cfg = configOf(g);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (which != 0 && i + 1 != which) continue;
    out << io::emitNative(normalizeItem(problem.program.signature, items[i].pattern, cfg, fresh, as)) << '\n';
  }
  return kOk;
}

int cmdCheck(const Globals& g, const std::string& file, bool requireExhaustive, std::ostream& out) {
  auto problem = io::parseProblem(readFile(file));
  auto fresh = namerFor(g, problem);
  const auto cfg = configOf(g);
  const auto groups = groupsOf(problem);
  bool failed = false;
  for (const auto& group : groups) {
    auto report = analyze(problem.program.signature, group.patterns, cfg, fresh, group.shape);
    std::set<std::size_t> useless;
    for (auto i : report.uselessIndices) useless.insert(group.sources[i - 1]);
    report.uselessIndices = useless;
    out << label(group, groups.size()) << io::emitNative(report) << '\n';
    failed = failed || !useless.empty() || (requireExhaustive && !report.exhaustive);
  }
  return failed ? kCheckFailed : kOk;
}

int cmdDisambiguate(const Globals& g, const std::string& file, std::ostream& out) {
  auto problem = io::parseProblem(readFile(file));
  auto fresh = namerFor(g, problem);
  const auto cfg = configOf(g);
  const auto groups = groupsOf(problem);
  for (const auto& group : groups) {
    auto parts = disambiguate(problem.program.signature, group.patterns, cfg, fresh);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out << label(group, groups.size()) << 'P' << group.sources[i] << " = " << io::emitNative(parts[i]) << '\n';
    }
  }
  return kOk;
}

int cmdMinimize(const Globals& g, const std::string& file, std::ostream& out) {
  auto problem = io::parseProblem(readFile(file));
  auto fresh = namerFor(g, problem);
  const auto cfg = configOf(g);
  const auto& sig = problem.program.signature;
  for (const auto& item : itemsOf(problem)) {
    auto nf = normalizeItem(sig, item.pattern, cfg, fresh, false);
    auto result = minimum(sig, nf.summands(), cfg);
    const auto& s = result.stats;
    out << item.label << ": " << io::emitNative(NormalForm::fromSummands(result.patterns)) << '\n'
        << "  stats: input " << s.inputSize << ", prefiltered " << s.prefilteredSize << ", kernel "
        << s.kernelSeedSize << ", output " << s.outputSize << ", subsumption calls " << s.subsumptionCalls << '\n';
  }
  return kOk;
}

int cmdCompile(const Globals& g, const std::string& file, const std::string& mode, bool minimize,
               const std::string& format, const std::string& output, std::ostream& out) {
  auto problem = io::parseProblem(readFile(file));
  if (!problem.hasRules) throw InputError(file + ": no rules to compile");
  if (format == "tpdb" && mode == "all") throw InputError("tpdb output needs an order-independent program (--mode order)");
  auto fresh = namerFor(g, problem);
  CompileOptions opts;
  opts.normalize = configOf(g);
  opts.minimize = minimize;
  auto compiled = mode == "all" ? trAll(problem.program, opts, fresh) : trOrder(problem.program, opts, fresh);
  std::string text = format == "tpdb" ? io::emitTPDB(compiled) : io::emitNative(compiled);
  if (output.empty() || output == "-") {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return kOk;
  }
  std::ofstream file_out(output, std::ios::binary);
  if (!file_out) throw InputError("cannot write " + output);
  file_out << text;
  return kOk;
}

std::vector<Term> resultSet(const std::vector<Step>& steps) {
  std::vector<Term> out;
  for (const auto& s : steps) out.push_back(s.result);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int cmdOracle(const Globals& g, const std::string& file, int depth, std::ostream& out) {
  auto problem = io::parseProblem(readFile(file));
  auto fresh = namerFor(g, problem);
  const auto cfg = configOf(g);
  const auto& sig = problem.program.signature;
  std::size_t checks = 0;
  std::size_t failures = 0;
  auto fail = [&](const std::string& what) {
    ++failures;
    out << "discrepancy: " << what << '\n';
  };

  for (std::size_t i = 0; i < problem.patterns.size(); ++i) {
    const auto& p = problem.patterns[i];
    auto shape = inferShape(sig, p);
    if (!shape) continue;
    const std::string name = "pattern " + std::to_string(i + 1);
    auto reference = evaluateEquations(sig, p, depth, *shape);
    auto agrees = [&](const Pattern& q) {
      auto got = oracleSemantics(sig, q, depth, *shape);
      return std::set<Term>(got.terms.begin(), got.terms.end()) == reference;
    };
    Pattern q = eliminateAnti(sig, p, fresh);
    ++checks;
    if (!agrees(q)) fail(name + ": matcher and set equations disagree");
    for (bool as : {false, true}) {
      if (!as && q.contains(PatternKind::At)) continue;
      ++checks;
      auto nf = as ? normalizeRrCat(sig, q, cfg, fresh) : normalizeRrC(sig, q, cfg, fresh);
      if (!agrees(nf.toPattern())) fail(name + (as ? " (with aliases)" : "") + ": normal form " + toString(nf));
    }
  }

  if (problem.hasRules) {
    const auto& prog = problem.program;
    CompileOptions opts;
    opts.normalize = cfg;
    auto all = trAll(prog, opts, fresh);
    auto order = trOrder(prog, opts, fresh);
    Stepper source(prog, prog.mode == ProgramMode::Ordered), allStep(all, true), orderStep(order, false);
    Universe universe(sig);
    for (const auto& d : sig.defined()) {
      for (const auto& args : universe.values(ValueShape::of(d.argSorts), depth)) {
        Term t = Term::app(d.name, {args.args().begin(), args.args().end()});
        ++checks;
        auto expected = resultSet(source.step(t));
        if (resultSet(allStep.step(t)) != expected) fail("all-rules program on " + toString(t));
        if (resultSet(orderStep.step(t)) != expected) fail("order-independent program on " + toString(t));
      }
    }
  }

  out << "oracle: " << checks << " checks, " << failures << " discrepancies\n";
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended pattern normalizer, analyzer and rule compiler", "patc"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--no-opt-cut", g.noCut, "Disable the cut of useless choices");
  app.add_flag("--no-opt-sorted", g.noSorted, "Expand variables over all constructors, ignoring sorts");
  app.add_option("--fuel", g.fuel, "Rewrite step budget per normalization")->check(CLI::PositiveNumber);
  app.add_option("--seed-prefix", g.prefix, "Prefix of generated variable names");

  std::string file;
  std::size_t which = 0;
  bool as = false;
  bool requireExhaustive = false;
  std::string mode = "order";
  bool minimize = false;
  std::string format = "native";
  std::string output;
  int depth = 3;

  auto* normalize = app.add_subcommand("normalize", "Print the normal form of the patterns and rule left-hand sides");
  normalize->add_option("file", file, "Problem file")->required();
  normalize->add_option("--pattern", which, "Only the Nth pattern (patterns first, then rules)")
      ->check(CLI::PositiveNumber);
  normalize->add_flag("--as", as, "Use the as-pattern calculus");

  auto* check = app.add_subcommand("check", "Report useless rules and exhaustiveness");
  check->add_option("file", file, "Problem file")->required();
  check->add_flag("--require-exhaustive", requireExhaustive, "Fail when a symbol is not exhaustively defined");

  auto* disamb = app.add_subcommand("disambiguate", "Print the disjoint parts of each pattern");
  disamb->add_option("file", file, "Problem file")->required();

  auto* minim = app.add_subcommand("minimize", "Print minimized normal forms and statistics");
  minim->add_option("file", file, "Problem file")->required();

  auto* compile = app.add_subcommand("compile", "Compile the rules into plain constructor rules");
  compile->add_option("file", file, "Problem file")->required();
  compile->add_option("--mode", mode, "all: keep the order; order: remove it")
      ->check(CLI::IsMember({"all", "order"}));
  compile->add_flag("--minimize", minimize, "Minimize the rules derived from each source rule");
  compile->add_option("--format", format, "Output syntax")->check(CLI::IsMember({"native", "tpdb"}));
  compile->add_option("-o,--output", output, "Output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "Cross-check the file against the brute-force semantics");
  oracle->add_option("file", file, "Problem file")->required();
  oracle->add_option("--depth", depth, "Height bound of the enumerated values")->check(CLI::Range(1, 6));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (normalize->parsed()) return cmdNormalize(g, file, which, as, out);
    if (check->parsed()) return cmdCheck(g, file, requireExhaustive, out);
    if (disamb->parsed()) return cmdDisambiguate(g, file, out);
    if (minim->parsed()) return cmdMinimize(g, file, out);
    if (compile->parsed()) return cmdCompile(g, file, mode, minimize, format, output, out);
    if (oracle->parsed()) return cmdOracle(g, file, depth, out);
  } catch (const io::ParseFailure& e) {
    for (const auto& error : e.errors()) err << file << ':' << io::toString(error) << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "patc: " << e.what() << '\n';
    return kInputError;
  } catch (const ShapeMismatch& e) {
    err << "patc: " << e.what() << '\n';
    return kInputError;
  } catch (const FuelExhausted& e) {
    err << "patc: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "patc: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace patcomp::cli
