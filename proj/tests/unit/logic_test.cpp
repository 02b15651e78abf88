#include <gtest/gtest.h>

#include "cube/logic.hpp"
#include "helpers.hpp"

namespace cube::testing {
namespace {

Formula formula(const char* text) {
  auto f = parse_formula(text);
  EXPECT_TRUE(f) << text << ": " << (f ? "" : f.error());
  return f ? *f : Formula::verum();
}

EncodedFormula encode(const char* text) {
  auto e = formula_to_type(formula(text));
  EXPECT_TRUE(e) << text;
  return e ? *e : EncodedFormula{};
}

TEST(Formula, ParsePrecedence) {
  EXPECT_EQ(to_string(formula("A & B | C -> D")), to_string(formula("((A & B) | C) -> D")));
  EXPECT_EQ(to_string(formula("A -> B -> C")), to_string(formula("A -> (B -> C)")));
  EXPECT_EQ(to_string(formula("~A & B")), to_string(formula("(~A) & B")));
  EXPECT_FALSE(parse_formula("A &"));
  EXPECT_FALSE(parse_formula("forall x. P x"));
}

TEST(Formula, PrintParsesBack) {
  for (const char* text : {"A & B -> B & A", "~~A -> A", "forall x:D. P x -> exists y:D. P y", "(A | B) & True"}) {
    Formula f = formula(text);
    EXPECT_EQ(to_string(formula(to_string(f).c_str())), to_string(f));
  }
}

TEST(Encoding, Connectives) {
  EncodedFormula conj = encode("A & B");
  EXPECT_TRUE(alpha_equal(conj.type, parse("A & B", conj.context.names())));
  EncodedFormula neg = encode("~A");
  EXPECT_TRUE(alpha_equal(neg.type, parse("A -> Void", neg.context.names())));
  EncodedFormula all = encode("forall x:A. P x");
  EXPECT_TRUE(alpha_equal(all.type, parse("Pi x:A. P x", all.context.names())));
  EXPECT_EQ(all.context.names(), (std::vector<std::string>{"A", "P"}));
  EncodedFormula ex = encode("exists x:A. P x");
  EXPECT_TRUE(alpha_equal(ex.type, parse("Sig x:A. P x", ex.context.names())));
  EncodedFormula bot = encode("False");
  EXPECT_TRUE(alpha_equal(bot.type, parse("Void")));
}

TEST(CheckProof, Examples) {
  PtsSpec arrow = cube_spec(CubeCorner::Arrow);
  EXPECT_TRUE(check_proof(arrow, formula("A -> A"), parse("\\x:A. x", {"A"})));
  EXPECT_TRUE(check_proof(arrow, formula("A & B -> B & A"), parse("\\p:A & B. (p.2, p.1)", {"A", "B"})));
  EXPECT_FALSE(check_proof(arrow, formula("A & B -> B & A"), parse("\\p:A & B. p", {"A", "B"})));
}

TEST(CheckProof, ModusPonensIsApplication) {
  PtsSpec arrow = cube_spec(CubeCorner::Arrow);
  Context ctx = context({{"A", "Star"}, {"B", "Star"}, {"f", "A -> B"}, {"a", "A"}});
  EXPECT_TRUE(check(arrow, ctx, parse("f a", ctx.names()), parse("B", ctx.names())));
}

TEST(ProofLibrary, EveryProofChecks) {
  EXPECT_GE(proof_library().size(), 10u);
  for (const ProofEntry& e : proof_library()) {
    Formula f = formula(e.formula.c_str());
    EncodedFormula enc = encode(e.formula.c_str());
    auto spec = spec_by_name(e.spec);
    ASSERT_TRUE(spec) << e.name;
    Term proof = parse(e.proof, enc.context.names());
    auto ok = check_proof(*spec, f, proof);
    EXPECT_TRUE(ok) << e.name << ": " << (ok ? "" : format_diagnostic(ok.error()));
  }
}

TEST(Inhabit, FindsAndRechecksProofs) {
  for (const char* text : {"A -> A", "(A -> B) -> (B -> C) -> A -> C", "A & B -> B & A", "A -> ~~A",
                           "(A -> B -> C) -> A & B -> C", "False -> A", "True"}) {
    Formula f = formula(text);
    auto r = inhabit(f, 6);
    ASSERT_TRUE(r) << text;
    ASSERT_TRUE(*r) << text;
    EXPECT_TRUE(check_proof(formula_spec(f), f, **r)) << text;
  }
}

TEST(Inhabit, IdentityIsTheIdentity) {
  auto r = inhabit(formula("A -> A"), 1);
  ASSERT_TRUE(r && *r);
  EXPECT_TRUE(alpha_equal(**r, parse("\\x:A. x", {"A"})));
}

TEST(Inhabit, ClassicalPrinciplesHaveNoProof) {
  for (const char* text : {"((A -> B) -> A) -> A", "False", "~~A -> A", "A", "A -> B"}) {
    auto r = inhabit(formula(text), 8);
    ASSERT_TRUE(r) << text;
    EXPECT_FALSE(*r) << text;
  }
}

TEST(Inhabit, ReportsUnsupportedFragments) {
  auto r = inhabit(formula("A | B -> B | A"), 4);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().construct, "disjunction");
  EXPECT_FALSE(inhabit(formula("forall x:D. P x -> P x"), 4));
}

TEST(FormulaSpec, PicksTheSmallestCorner) {
  EXPECT_EQ(formula_spec(formula("A -> A")).name, "arrow");
  EXPECT_EQ(formula_spec(formula("A | B")).name, "two");
  EXPECT_EQ(formula_spec(formula("forall x:D. P x")).name, "P2");
}

}  // namespace
}  // namespace cube::testing
