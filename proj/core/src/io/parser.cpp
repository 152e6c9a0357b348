#include "patcomp/io/parser.hpp"

#include <cctype>
#include <optional>
#include <set>

#include "patcomp/variables.hpp"

namespace patcomp::io {

std::string toString(const ParseError& e) {
  return std::to_string(e.location.line) + ":" + std::to_string(e.location.column) + ": " + e.message;
}

namespace {

std::string joinErrors(const std::vector<ParseError>& errors) {
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty()) out += '\n';
    out += toString(e);
  }
  return out;
}

}  // namespace

ParseFailure::ParseFailure(std::vector<ParseError> errors)
    : std::runtime_error(joinErrors(errors)), errors_(std::move(errors)) {}

namespace {

enum class Tok { Id, Punct, Bottom, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceLocation loc;
};

bool isIdStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool isIdChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\''; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skipBlank();
      Token t;
      t.loc = {line_, col_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      if (text_.substr(pos_, 3) == "_|_") {
        t.kind = Tok::Bottom;
        t.text = "_|_";
        advance(3);
      } else if (isIdStart(text_[pos_])) {
        std::size_t end = pos_;
        while (end < text_.size() && isIdChar(text_[end])) ++end;
        t.kind = Tok::Id;
        t.text = std::string(text_.substr(pos_, end - pos_));
        advance(end - pos_);
      } else if (text_.substr(pos_, 2) == "->") {
        t.kind = Tok::Punct;
        t.text = "->";
        advance(2);
      } else if (std::string_view("(),;=|:+\\@!<>").find(text_[pos_]) != std::string_view::npos) {
        t.kind = Tok::Punct;
        t.text = std::string(1, text_[pos_]);
        advance(1);
      } else {
        throw ParseFailure({{t.loc, std::string("unexpected character '") + text_[pos_] + "'"}});
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skipBlank() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
        advance(1);
      } else if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct SortDecl {
  std::string name;
  SourceLocation loc;
  std::vector<std::pair<std::string, std::vector<std::string>>> ctors;
};

struct DefDecl {
  std::string name;
  SourceLocation loc;
  std::vector<std::string> args;
  std::string result;
};

class Parser {
 public:
  Parser(std::string_view text, Signature* sig) : toks_(Lexer(text).run()), sig_(sig) {}

  Problem file() {
    Problem problem;
    std::vector<SortDecl> sorts;
    std::vector<DefDecl> defs;
    while (isId("sort") || isId("def")) {
      if (isId("sort")) {
        sorts.push_back(sortDecl());
      } else {
        defs.push_back(defDecl());
      }
    }
    buildSignature(sorts, defs);
    if (isId("rules")) {
      problem.hasRules = true;
      next();
      if (isId("ordered")) {
        problem.program.mode = ProgramMode::Ordered;
      } else if (isId("set")) {
        problem.program.mode = ProgramMode::Set;
      } else {
        fail("expected 'ordered' or 'set'");
      }
      next();
      do {
        problem.program.rules.push_back(rule());
        expect(";");
      } while (peek().kind == Tok::Id && !isId("pattern"));
    }
    while (isId("pattern")) {
      next();
      problem.patterns.push_back(standalone(pattern()));
      expect(";");
    }
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    if (errors_.empty() && problem.hasRules) {
      problem.program.signature = *sig_;
      for (const auto& v : validate(problem.program)) {
        errors_.push_back({ruleLocs_.at(v.rule - 1), v.message});
      }
    }
    if (!errors_.empty()) throw ParseFailure(errors_);
    problem.program.signature = *sig_;
    return problem;
  }

  Pattern onlyPattern() {
    Pattern p = standalone(pattern());
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    if (!errors_.empty()) throw ParseFailure(errors_);
    return p;
  }

  Term onlyTerm() {
    Term t = term({});
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return t;
  }

 private:
  // -- tokens ---------------------------------------------------------------

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool isId(std::string_view word) const { return peek().kind == Tok::Id && peek().text == word; }
  bool isPunct(std::string_view p) const { return peek().kind == Tok::Punct && peek().text == p; }

  [[noreturn]] void fail(const std::string& message) {
    errors_.push_back({peek().loc, message});
    throw ParseFailure(errors_);
  }

  void expect(std::string_view p) {
    if (!isPunct(p)) {
      fail("expected '" + std::string(p) + "'" +
           (peek().kind == Tok::End ? std::string(" at end of input") : ", found '" + peek().text + "'"));
    }
    next();
  }

  std::string identifier(const char* what) {
    if (peek().kind != Tok::Id) fail(std::string("expected ") + what);
    return next().text;
  }

  // -- declarations ---------------------------------------------------------

  SortDecl sortDecl() {
    next();
    SortDecl d;
    d.loc = peek().loc;
    d.name = identifier("a sort name");
    expect("=");
    do {
      std::string c = identifier("a constructor name");
      std::vector<std::string> args;
      if (isPunct("(")) {
        next();
        do {
          args.push_back(identifier("a sort name"));
        } while (isPunct(",") && (next(), true));
        expect(")");
      }
      d.ctors.emplace_back(std::move(c), std::move(args));
    } while (isPunct("|") && (next(), true));
    expect(";");
    return d;
  }

  DefDecl defDecl() {
    next();
    DefDecl d;
    d.loc = peek().loc;
    d.name = identifier("a symbol name");
    expect(":");
    do {
      d.args.push_back(identifier("a sort name"));
    } while (isPunct(",") && (next(), true));
    expect("->");
    d.result = identifier("a sort name");
    expect(";");
    return d;
  }

  void buildSignature(const std::vector<SortDecl>& sorts, const std::vector<DefDecl>& defs) {
    try {
      for (const auto& s : sorts) sig_->addSort(s.name);
    } catch (const SignatureError& e) {
      fail(e.what());
    }
    auto declared = [&](const std::string& s, SourceLocation loc) {
      if (!sig_->hasSort(s)) errors_.push_back({loc, "undeclared sort " + s});
    };
    for (const auto& s : sorts) {
      for (const auto& [c, args] : s.ctors) {
        for (const auto& a : args) declared(a, s.loc);
        try {
          sig_->addConstructor(c, args, s.name);
        } catch (const SignatureError& e) {
          errors_.push_back({s.loc, e.what()});
        }
      }
    }
    for (const auto& d : defs) {
      for (const auto& a : d.args) declared(a, d.loc);
      declared(d.result, d.loc);
      try {
        sig_->addDefined(d.name, d.args, d.result);
      } catch (const SignatureError& e) {
        errors_.push_back({d.loc, e.what()});
      }
    }
    if (errors_.empty()) {
      try {
        sig_->check();
      } catch (const SignatureError& e) {
        errors_.push_back({{1, 1}, e.what()});
      }
    }
    if (!errors_.empty()) throw ParseFailure(errors_);
  }

  // -- patterns -------------------------------------------------------------

  Pattern pattern() {
    Pattern p = difference();
    while (isPunct("+")) {
      next();
      p = Pattern::plus(p, difference());
    }
    return p;
  }

  Pattern difference() {
    Pattern p = aliased();
    while (isPunct("\\")) {
      next();
      p = Pattern::minus(p, aliased());
    }
    return p;
  }

  Pattern aliased() {
    if (peek().kind == Tok::Id && toks_[pos_ + 1].kind == Tok::Punct && toks_[pos_ + 1].text == "@") {
      const Token id = next();
      next();
      if (sig_->isSymbol(id.text)) {
        errors_.push_back({id.loc, "alias " + id.text + " is a declared symbol"});
      }
      Pattern x = Pattern::var(id.text);
      locs_[x.id()] = id.loc;
      return Pattern::at(x, aliased());
    }
    return base();
  }

  Pattern base() {
    const Token t = peek();
    if (t.kind == Tok::Bottom) {
      next();
      return Pattern::bottom();
    }
    if (isPunct("!")) {
      next();
      return Pattern::anti(base());
    }
    if (isPunct("(")) {
      next();
      Pattern p = pattern();
      expect(")");
      return p;
    }
    if (isPunct("<")) {
      next();
      std::vector<Pattern> args = patternList(">");
      sig_->registerTuple(args.size());
      return Pattern::tuple(std::move(args));
    }
    if (t.kind != Tok::Id) fail("expected a pattern" + (t.kind == Tok::End ? std::string() : ", found '" + t.text + "'"));
    next();
    const auto* c = sig_->findConstructor(t.text);
    if (isPunct("(")) {
      next();
      std::vector<Pattern> args = patternList(")");
      if (c == nullptr) {
        errors_.push_back({t.loc, (sig_->findDefined(t.text) ? "defined symbol " : "unknown constructor ") + t.text});
      } else if (c->arity() != args.size()) {
        errors_.push_back({t.loc, t.text + " expects " + std::to_string(c->arity()) + " arguments, got " +
                                      std::to_string(args.size())});
      }
      Pattern p = Pattern::constr(t.text, std::move(args));
      locs_[p.id()] = t.loc;
      return p;
    }
    if (c != nullptr) {
      if (c->arity() != 0) errors_.push_back({t.loc, t.text + " expects " + std::to_string(c->arity()) + " arguments"});
      return Pattern::constr(t.text);
    }
    if (sig_->findDefined(t.text) != nullptr) errors_.push_back({t.loc, "defined symbol " + t.text + " in a pattern"});
    Pattern x = Pattern::var(t.text);
    locs_[x.id()] = t.loc;
    return x;
  }

  std::vector<Pattern> patternList(std::string_view close) {
    std::vector<Pattern> args;
    do {
      args.push_back(pattern());
    } while (isPunct(",") && (next(), true));
    expect(close);
    return args;
  }

  // -- sorts of variables ---------------------------------------------------

  std::string defaultSort() const { return sig_->sorts().size() == 1 ? sig_->sorts().front() : std::string{}; }

  Pattern typed(const Pattern& p, const std::string& expected, const std::vector<std::string>* tupleSorts) {
    switch (p.kind()) {
      case PatternKind::Var: {
        std::string s = expected.empty() ? defaultSort() : expected;
        if (s.empty()) {
          auto it = locs_.find(p.id());
          errors_.push_back({it != locs_.end() ? it->second : SourceLocation{},
                             "cannot infer the sort of variable " + p.name()});
        }
        return p.withSort(s);
      }
      case PatternKind::Bottom:
        return p;
      case PatternKind::Constr: {
        if (p.arity() == 0) return p;
        const auto* c = sig_->findConstructor(p.name());
        std::vector<Pattern> kids;
        for (std::size_t i = 0; i < p.arity(); ++i) {
          std::string s = c != nullptr && i < c->arity() ? c->argSorts[i] : std::string{};
          kids.push_back(typed(p.child(i), s, nullptr));
        }
        return p.withChildren(std::move(kids));
      }
      case PatternKind::Tuple: {
        std::vector<Pattern> kids;
        for (std::size_t i = 0; i < p.arity(); ++i) {
          std::string s = tupleSorts != nullptr && i < tupleSorts->size() ? (*tupleSorts)[i] : std::string{};
          kids.push_back(typed(p.child(i), s, nullptr));
        }
        return p.withChildren(std::move(kids));
      }
      case PatternKind::At: {
        Pattern x = typed(p.alias(), expected, nullptr);
        return Pattern::at(x, typed(p.body(), expected, tupleSorts));
      }
      default: {
        std::vector<Pattern> kids;
        for (const auto& k : p.children()) kids.push_back(typed(k, expected, tupleSorts));
        return p.withChildren(std::move(kids));
      }
    }
  }

  void collectTupleSorts(const Pattern& p, std::vector<std::string>& acc) const {
    switch (p.kind()) {
      case PatternKind::Tuple:
        if (acc.size() < p.arity()) acc.resize(p.arity());
        for (std::size_t i = 0; i < p.arity(); ++i) {
          if (acc[i].empty()) acc[i] = inferSort(*sig_, p.child(i));
        }
        return;
      case PatternKind::Plus:
      case PatternKind::Minus:
        collectTupleSorts(p.left(), acc);
        collectTupleSorts(p.right(), acc);
        return;
      case PatternKind::At:
      case PatternKind::Anti:
        collectTupleSorts(p.body(), acc);
        return;
      default:
        return;
    }
  }

  void checkLinearity(const Pattern& p) {
    if (auto v = checkLinear(p)) {
      const Pattern& second = subtermAt(p, v->second);
      auto it = locs_.find(second.id());
      errors_.push_back({it != locs_.end() ? it->second : SourceLocation{},
                         "variable " + v->variable + " occurs twice (non-linear pattern)"});
    }
  }

  Pattern standalone(const Pattern& p) {
    checkLinearity(p);
    std::vector<std::string> tupleSorts;
    collectTupleSorts(p, tupleSorts);
    return typed(p, inferSort(*sig_, p), &tupleSorts);
  }

  // -- rules ----------------------------------------------------------------

  ExtendedRule rule() {
    ExtendedRule r;
    const Token head = peek();
    r.head = identifier("a rule head");
    ruleLocs_.push_back(head.loc);
    r.source = ruleLocs_.size();
    const auto* d = sig_->findDefined(r.head);
    if (d == nullptr) errors_.push_back({head.loc, "undeclared defined symbol " + r.head});
    expect("(");
    std::vector<Pattern> raw = patternList(")");
    checkLinearity(Pattern::tuple(raw));
    for (std::size_t i = 0; i < raw.size(); ++i) {
      std::string s = d != nullptr && i < d->arity() ? d->argSorts[i] : std::string{};
      r.lhs.push_back(typed(raw[i], s, nullptr));
    }
    expect("->");
    std::map<std::string, std::string> sorts;
    for (const auto& p : r.lhs) collectVarSorts(p, sorts);
    r.rhs = term(sorts);
    return r;
  }

  static void collectVarSorts(const Pattern& p, std::map<std::string, std::string>& out) {
    if (p.is(PatternKind::Var)) out.emplace(p.name(), p.sort());
    for (const auto& c : p.children()) collectVarSorts(c, out);
  }

  Term term(const std::map<std::string, std::string>& sorts) {
    const Token t = peek();
    const std::string name = identifier("a term");
    if (isPunct("(")) {
      next();
      std::vector<Term> args;
      do {
        args.push_back(term(sorts));
      } while (isPunct(",") && (next(), true));
      expect(")");
      if (!sig_->isSymbol(name)) errors_.push_back({t.loc, "unknown symbol " + name});
      return Term::app(name, std::move(args));
    }
    if (sig_->isSymbol(name)) return Term::app(name);
    auto it = sorts.find(name);
    return Term::var(name, it != sorts.end() ? it->second : std::string{});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature* sig_;
  std::vector<ParseError> errors_;
  std::map<const void*, SourceLocation> locs_;
  std::vector<SourceLocation> ruleLocs_;
};

}  // namespace

Problem parseProblem(std::string_view text) {
  Signature sig;
  Parser parser(text, &sig);
  return parser.file();
}

Pattern parsePattern(const Signature& sig, std::string_view text) {
  Signature copy = sig;
  Parser parser(text, &copy);
  return parser.onlyPattern();
}

Term parseTerm(const Signature& sig, std::string_view text) {
  Signature copy = sig;
  Parser parser(text, &copy);
  return parser.onlyTerm();
}

}  // namespace patcomp::io
