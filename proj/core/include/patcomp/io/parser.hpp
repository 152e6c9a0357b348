#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "patcomp/compiler.hpp"
#include "patcomp/pattern.hpp"
#include "patcomp/signature.hpp"
#include "patcomp/term.hpp"

namespace patcomp::io {

struct SourceLocation {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct ParseError {
  SourceLocation location;
  std::string message;
};

std::string toString(const ParseError& e);

/// Syntax, sort, linearity or well-formedness errors, in source order.
class ParseFailure : public std::runtime_error {
 public:
  explicit ParseFailure(std::vector<ParseError> errors);
  const std::vector<ParseError>& errors() const { return errors_; }

 private:
  std::vector<ParseError> errors_;
};

/// A problem file:
///
///   sort U = a | b | f(U,U);
///   def phi : U,U -> U;
///   rules ordered
///     phi(x, y@!a) -> y;
///     phi(a+b, y) -> y;
///   pattern f(x,y) \ f(z,a);
///
/// The rules block and the pattern directives are both optional.
struct Problem {
  RuleProgram program;
  std::vector<Pattern> patterns;
  bool hasRules = false;
};

/// Throws ParseFailure.
Problem parseProblem(std::string_view text);

/// A standalone pattern over sig; variable sorts are inferred from context.
Pattern parsePattern(const Signature& sig, std::string_view text);
/// A term over sig; identifiers that are not symbols are variables.
Term parseTerm(const Signature& sig, std::string_view text);

}  // namespace patcomp::io
