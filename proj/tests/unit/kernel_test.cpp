#include <gtest/gtest.h>

#include "cube/kernel.hpp"
#include "helpers.hpp"

namespace cube::testing {
namespace {

PtsSpec arrow() { return cube_spec(CubeCorner::Arrow); }
PtsSpec two() { return cube_spec(CubeCorner::Two); }

TEST(Infer, PolymorphicIdentityInSystemF) {
  auto ty = infer(two(), {}, parse("/\\a. \\x:a. x"));
  ASSERT_TRUE(ty) << format_diagnostic(ty.error());
  EXPECT_TRUE(alpha_equal(*ty, parse("Pi a:Star. a -> a")));
}

TEST(Infer, ApplicationToWrongTypeIsAMismatch) {
  Context ctx = context({{"s", "Star"}, {"t", "Star"}, {"y", "t"}});
  auto ty = infer(arrow(), ctx, parse("(\\x:s. x) y", ctx.names()));
  ASSERT_FALSE(ty);
  EXPECT_EQ(ty.error().kind, DiagnosticKind::TypeMismatch);
  EXPECT_EQ(ty.error().rule, "APP");
  EXPECT_EQ(ty.error().scope, ctx.names());
  EXPECT_TRUE(alpha_equal(ty.error().expected, Term::var(2)));  // s
  EXPECT_TRUE(alpha_equal(ty.error().found, Term::var(1)));     // t
  EXPECT_EQ(ty.error().location, (Path{1}));
}

TEST(Infer, SimplyTypedIdentity) {
  Context ctx = context({{"s", "Star"}});
  auto ty = infer(arrow(), ctx, parse("\\x:s. x", ctx.names()));
  ASSERT_TRUE(ty);
  EXPECT_TRUE(alpha_equal(*ty, parse("s -> s", ctx.names())));
}

TEST(Infer, TypeAbstractionNeedsBoxStar) {
  auto ty = infer(arrow(), {}, parse("/\\a. \\x:a. x"));
  ASSERT_FALSE(ty);
  EXPECT_EQ(ty.error().kind, DiagnosticKind::RuleNotAllowed);
  ASSERT_TRUE(ty.error().rule_pair);
  EXPECT_EQ(ty.error().rule_pair->first, SortId::box());
  EXPECT_EQ(ty.error().rule_pair->second, SortId::star());
}

TEST(Infer, StarInCubeAndLambdaStar) {
  EXPECT_TRUE(alpha_equal(infer(arrow(), {}, Term::star()).value(), Term::box()));
  EXPECT_TRUE(alpha_equal(infer(lambda_star_spec(), {}, Term::star()).value(), Term::star()));
}

TEST(Infer, BoxHasNoTypeInTheCube) {
  auto ty = infer(arrow(), {}, Term::box());
  ASSERT_FALSE(ty);
  EXPECT_EQ(ty.error().kind, DiagnosticKind::AxiomMissing);
}

TEST(Infer, UnboundVariable) {
  auto ty = infer(arrow(), {}, Term::var(0, "q"));
  ASSERT_FALSE(ty);
  EXPECT_EQ(ty.error().kind, DiagnosticKind::UnboundVariable);
}

TEST(Infer, UnannotatedLambdaNeedsAnnotation) {
  auto ty = infer(arrow(), {}, parse("\\x. x"));
  ASSERT_FALSE(ty);
  EXPECT_EQ(ty.error().kind, DiagnosticKind::MissingAnnotation);
}

TEST(Infer, ApplyingANonFunction) {
  Context ctx = context({{"s", "Star"}, {"y", "s"}});
  auto ty = infer(arrow(), ctx, parse("y y", ctx.names()));
  ASSERT_FALSE(ty);
  EXPECT_EQ(ty.error().kind, DiagnosticKind::NotAFunction);
}

TEST(Infer, ProjectingANonPair) {
  Context ctx = context({{"s", "Star"}, {"y", "s"}});
  auto ty = infer(arrow(), ctx, parse("y.1", ctx.names()));
  ASSERT_FALSE(ty);
  EXPECT_EQ(ty.error().kind, DiagnosticKind::NotAPair);
}

TEST(Infer, PairsAndProjections) {
  Context ctx = context({{"A", "Star"}, {"B", "Star"}, {"a", "A"}, {"b", "B"}});
  auto p = infer(arrow(), ctx, parse("(a, b)", ctx.names()));
  ASSERT_TRUE(p);
  EXPECT_TRUE(alpha_equal(*p, parse("A & B", ctx.names())));
  auto l = infer(arrow(), ctx, parse("(a, b).1", ctx.names()));
  auto r = infer(arrow(), ctx, parse("(a, b).2", ctx.names()));
  EXPECT_TRUE(alpha_equal(l.value(), parse("A", ctx.names())));
  EXPECT_TRUE(alpha_equal(r.value(), parse("B", ctx.names())));
  auto swap = infer(arrow(), ctx, parse("\\p:A & B. (p.2, p.1)", ctx.names()));
  ASSERT_TRUE(swap);
  EXPECT_TRUE(alpha_equal(*swap, parse("A & B -> B & A", ctx.names())));
}

TEST(Infer, DependentPairInLambdaP) {
  PtsSpec p = cube_spec(CubeCorner::P);
  Context ctx = context({{"A", "Star"}, {"P", "A -> Star"}, {"a", "A"}, {"h", "P a"}});
  auto ty = infer(p, ctx, parse("(a, h as Sig x:A. P x)", ctx.names()));
  ASSERT_TRUE(ty) << format_diagnostic(ty.error());
  EXPECT_TRUE(alpha_equal(*ty, parse("Sig x:A. P x", ctx.names())));
  auto snd = infer(p, ctx, parse("(a, h as Sig x:A. P x).2", ctx.names()));
  ASSERT_TRUE(snd);
  // The second component's type mentions the first projection, which converts to a.
  EXPECT_TRUE(conv(*snd, parse("P a", ctx.names())).value());
}

TEST(Infer, ConversionUnderTypeOperators) {
  PtsSpec w = cube_spec(CubeCorner::WeakOmega);
  Context ctx = context({{"b", "Star"}, {"y", "b"}});
  auto ty = infer(w, ctx, parse("(\\x:(\\a:Star. a) b. x) y", ctx.names()));
  ASSERT_TRUE(ty) << format_diagnostic(ty.error());
}

TEST(Check, Examples) {
  Context ctx = context({{"b", "Star"}});
  const auto names = ctx.names();
  EXPECT_TRUE(check(arrow(), ctx, parse("\\x:b. x", names), parse("b -> b", names)));
  EXPECT_TRUE(check(arrow(), ctx, parse("*"), parse("Unit")));
  auto bad = check(arrow(), ctx, parse("\\x:b. x", names), parse("b", names));
  ASSERT_FALSE(bad);
  EXPECT_EQ(bad.error().kind, DiagnosticKind::TypeMismatch);
}

TEST(Conv, Examples) {
  Context ctx = context({{"b", "Star"}});
  const auto names = ctx.names();
  EXPECT_TRUE(conv(parse("(\\a:Star. a) b", names), parse("b", names)).value());
  EXPECT_FALSE(conv(parse("b -> b", names), parse("b", names)).value());
}

TEST(Conv, DivergentTermsExhaustFuel) {
  auto r = conv(parse("(\\x. x x) (\\x. x x)"), Term::star(), 50);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().kind, DiagnosticKind::FuelExhausted);
}

TEST(WfContext, Examples) {
  EXPECT_TRUE(wf_context(arrow(), {}));
  EXPECT_TRUE(wf_context(arrow(), context({{"b", "Star"}, {"x", "b"}})));
  Context dangling;
  dangling.push("x", Term::var(0, "y"));
  auto r = wf_context(arrow(), dangling);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.error().kind, DiagnosticKind::UnboundVariable);
  EXPECT_EQ(r.error().declaration, 0u);
}

TEST(WfContext, TypeFamiliesNeedStarBox) {
  Context ctx = context({{"A", "Star"}, {"P", "A -> Star"}});
  EXPECT_FALSE(wf_context(arrow(), ctx));
  EXPECT_TRUE(wf_context(cube_spec(CubeCorner::P), ctx));
}

TEST(Builtins, UnitVoidAndBool) {
  PtsSpec itt = itt_spec();
  EXPECT_TRUE(check(arrow(), {}, parse("\\v:Void. absurd Unit v"), parse("Void -> Unit")));
  auto ty = infer(itt, {}, parse("if Bool true false true"));
  ASSERT_TRUE(ty) << format_diagnostic(ty.error());
  EXPECT_TRUE(alpha_equal(*ty, parse("Bool")));
  EXPECT_FALSE(infer(arrow(), {}, parse("true")));  // booleans are not enabled in the cube
}

TEST(Diagnostics, ScopeNamesTheContext) {
  Context ctx = context({{"s", "Star"}, {"t", "Star"}, {"y", "t"}});
  auto ty = infer(arrow(), ctx, parse("\\z:s. (\\x:s. x) y", ctx.names()));
  ASSERT_FALSE(ty);
  EXPECT_EQ(ty.error().location, (Path{1, 1}));
  EXPECT_EQ(ty.error().scope, (std::vector<std::string>{"s", "t", "y", "z"}));
  EXPECT_EQ(format_diagnostic(ty.error()), "error[APP]: type mismatch: expected s, found t at 1.1");
}

}  // namespace
}  // namespace cube::testing
