#include <gtest/gtest.h>

#include "patcomp/analysis.hpp"
#include "patcomp/matching.hpp"
#include "patcomp/oracle.hpp"
#include "support.hpp"

namespace patcomp {
namespace {

using testing::abf;
using testing::nf;
using testing::pat;

std::vector<Pattern> pats(const Signature& sig, std::initializer_list<std::string_view> texts) {
  std::vector<Pattern> out;
  for (auto t : texts) out.push_back(pat(sig, t));
  return out;
}

TEST(Subsumption, UselessPatternExample) {
  auto sig = abf();
  FreshNamer fresh;
  auto earlier = pats(sig, {"<b,y>", "<a,b>", "<f(x,y),z>"});
  EXPECT_TRUE(isSubsumed(sig, pat(sig, "<x,b>"), earlier, {}, fresh));
  auto r = isSubsumed(sig, pat(sig, "<x,y>"), earlier, {}, fresh);
  EXPECT_FALSE(r);
  // <a,f(u,v)> is not matched by any of the three patterns either.
  EXPECT_TRUE(alphaEquivalent(r.residual, nf(sig, {"<a,a>", "<a,f(y1,y2)>"}))) << toString(r.residual);
  EXPECT_TRUE(isSubsumed(sig, pat(sig, "f(a,b)"), pats(sig, {"f(x,b)"}), {}, fresh));
}

TEST(Subsumption, IgnoresAliasesAndEliminatesAntiPatterns) {
  auto sig = abf();
  FreshNamer fresh;
  EXPECT_TRUE(isSubsumed(sig, pat(sig, "f(x, y@!a)"), pats(sig, {"f(u,b)", "f(v,f(w,w2))"}), {}, fresh));
  EXPECT_FALSE(isSubsumed(sig, pat(sig, "f(x, !a)"), pats(sig, {"f(u,b)"}), {}, fresh));
}

TEST(Useless, Indices) {
  auto sig = abf();
  FreshNamer fresh;
  EXPECT_EQ(uselessIndices(sig, pats(sig, {"<b,y>", "<a,b>", "<f(x,y),z>", "<x,b>"}), {}, fresh),
            std::set<std::size_t>{4});
  EXPECT_EQ(uselessIndices(sig, pats(sig, {"x", "a", "f(y,z)"}), {}, fresh), (std::set<std::size_t>{2, 3}));
  EXPECT_TRUE(uselessIndices(sig, pats(sig, {"f(a,y)", "f(b,y)"}), {}, fresh).empty());
}

TEST(Exhaustiveness, WitnessAndCompletion) {
  auto sig = abf();
  FreshNamer fresh;
  auto ps = pats(sig, {"<b,y>", "<a,b>", "<f(x,y),z>"});
  auto r = checkExhaustive(sig, ps, {}, fresh);
  EXPECT_FALSE(r.exhaustive);
  ASSERT_EQ(r.witnesses.size(), 2u);
  EXPECT_EQ(toString(r.witnesses[0]), "<a,a>");
  EXPECT_TRUE(alphaEqual(r.witnesses[1], pat(sig, "<a,f(u,v)>")));
  ASSERT_EQ(r.groundWitnesses.size(), 2u);
  EXPECT_EQ(r.groundWitnesses[0], Term::tuple({Term::app("a"), Term::app("a")}));
  ps.push_back(pat(sig, "<a,a>"));
  auto after = checkExhaustive(sig, ps, {}, fresh);
  EXPECT_FALSE(after.exhaustive);
  ASSERT_EQ(after.witnesses.size(), 1u);
  EXPECT_TRUE(alphaEqual(after.witnesses[0], pat(sig, "<a,f(u,v)>")));
  ps.push_back(pat(sig, "<a,f(u,v)>"));
  EXPECT_TRUE(checkExhaustive(sig, ps, {}, fresh).exhaustive);
  EXPECT_TRUE(checkExhaustive(sig, pats(sig, {"x"}), {}, fresh).exhaustive);
}

TEST(Exhaustiveness, GroundWitnessUsesSmallestValues) {
  auto sig = abf();
  FreshNamer fresh;
  auto r = checkExhaustive(sig, pats(sig, {"a", "f(x,a)"}), {}, fresh);
  EXPECT_FALSE(r.exhaustive);
  for (std::size_t i = 0; i < r.groundWitnesses.size(); ++i) {
    EXPECT_TRUE(r.groundWitnesses[i].isGround());
  }
  EXPECT_EQ(r.groundWitnesses.front(), Term::app("b"));
}

TEST(Exhaustiveness, ShapeMismatch) {
  auto sig = abf();
  FreshNamer fresh;
  EXPECT_THROW(checkExhaustive(sig, pats(sig, {"<a,b>", "<a,b,a>"}), {}, fresh), ShapeMismatch);
  EXPECT_THROW(checkExhaustive(sig, pats(sig, {"<a,b>", "a"}), {}, fresh), ShapeMismatch);
}

TEST(Disambiguation, SimpleExample) {
  auto sig = abf();
  FreshNamer fresh;
  auto sets = disambiguate(sig, pats(sig, {"f(x,y)", "f(z,a)"}), {}, fresh);
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_TRUE(alphaEquivalent(sets[0], nf(sig, {"f(x,y)"})));
  // The second pattern comes after the first one: only what the first misses is left.
  EXPECT_TRUE(sets[1].empty());
  auto swapped = disambiguate(sig, pats(sig, {"f(z,a)", "f(x,y)"}), {}, fresh);
  EXPECT_TRUE(alphaEquivalent(swapped[1], nf(sig, {"f(x,b)", "f(x,f(y1,y2))"}))) << toString(swapped[1]);
  auto single = disambiguate(sig, pats(sig, {"x"}), {}, fresh);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(alphaEquivalent(single[0], nf(sig, {"x"})));
}

TEST(Disambiguation, PartitionsTheValues) {
  auto sig = abf();
  FreshNamer fresh;
  auto ps = pats(sig, {"f(x,!a)", "f(a + b, y)", "x@f(u, v)", "z"});
  auto sets = disambiguate(sig, ps, {}, fresh);
  for (const auto& v : enumerate(sig, "U", 3).terms) {
    std::size_t first = 0;
    for (std::size_t i = 0; i < ps.size() && first == 0; ++i) {
      if (oracleSemantics(sig, eliminateAnti(sig, ps[i], fresh), 3).contains(v)) first = i + 1;
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      EXPECT_EQ(matchExtended(sets[i].toPattern(), v), first == i + 1) << toString(v) << " set " << i + 1;
    }
  }
}

TEST(Analyze, Report) {
  auto sig = abf();
  FreshNamer fresh;
  auto report = analyze(sig, pats(sig, {"<b,y>", "<a,b>", "<f(x,y),z>", "<x,b>", "<a,a>"}), {}, fresh);
  EXPECT_EQ(report.uselessIndices, std::set<std::size_t>{4});
  EXPECT_FALSE(report.exhaustive);
  ASSERT_EQ(report.witnesses.size(), 1u);
  EXPECT_TRUE(alphaEqual(report.witnesses[0], pat(sig, "<a,f(u,v)>")));
  auto full = analyze(sig, pats(sig, {"<b,y>", "<a,b>", "<f(x,y),z>", "<x,b>", "<a,a>", "<a,f(u,v)>"}), {}, fresh);
  EXPECT_EQ(full.uselessIndices, std::set<std::size_t>{4});
  EXPECT_TRUE(full.exhaustive);
  EXPECT_TRUE(full.witnesses.empty());
}

}  // namespace
}  // namespace patcomp
