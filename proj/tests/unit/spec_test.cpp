#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cube/spec.hpp"
#include "helpers.hpp"

namespace cube::testing {
namespace {

using RuleSet = std::set<std::pair<SortId, SortId>>;

RuleSet rules_of(const PtsSpec& s) {
  RuleSet out;
  for (const PiRule& r : s.rules) out.insert({r.domain, r.codomain});
  return out;
}

const SortId kStar = SortId::star();
const SortId kBox = SortId::box();

TEST(CubeSpec, RuleSets) {
  EXPECT_EQ(rules_of(cube_spec(CubeCorner::Arrow)), (RuleSet{{kStar, kStar}}));
  EXPECT_EQ(rules_of(cube_spec(CubeCorner::Two)), (RuleSet{{kStar, kStar}, {kBox, kStar}}));
  EXPECT_EQ(rules_of(cube_spec(CubeCorner::POmega)),
            (RuleSet{{kStar, kStar}, {kBox, kStar}, {kBox, kBox}, {kStar, kBox}}));
}

TEST(CubeSpec, CornersAreDistinctSubsetsOfTheTop) {
  std::set<RuleSet> seen;
  RuleSet top = rules_of(cube_spec(CubeCorner::POmega));
  for (CubeCorner c : kAllCorners) {
    PtsSpec s = cube_spec(c);
    RuleSet r = rules_of(s);
    EXPECT_TRUE(std::includes(top.begin(), top.end(), r.begin(), r.end()));
    EXPECT_TRUE(r.count({kStar, kStar}));
    EXPECT_TRUE(seen.insert(r).second) << corner_name(c);
    for (const PiRule& rule : s.rules) EXPECT_EQ(rule.result, rule.codomain);
    EXPECT_EQ(s.axiom_for(kStar), kBox);
    EXPECT_FALSE(s.axiom_for(kBox));
  }
  EXPECT_EQ(seen.size(), 8u);
}

TEST(CubeSpec, NamesRoundTrip) {
  for (CubeCorner c : kAllCorners) {
    EXPECT_EQ(parse_corner(corner_name(c)), c);
    EXPECT_TRUE(spec_by_name(corner_name(c)));
  }
  EXPECT_FALSE(parse_corner("lambda-omega-bar"));
  EXPECT_FALSE(spec_by_name("nope"));
}

TEST(Coc, LadderAllowsLargeKinds) {
  PtsSpec coc = coc_spec();
  EXPECT_TRUE(alpha_equal(infer(coc, {}, Term::box(1)).value(), Term::box(2)));
  EXPECT_TRUE(infer(coc, {}, parse("Pi k:Box. k -> k")));
}

TEST(Itt, UniverseOfAUniverse) {
  PtsSpec itt = itt_spec();
  EXPECT_TRUE(alpha_equal(infer(itt, {}, Term::universe(0)).value(), Term::universe(1)));
  EXPECT_TRUE(alpha_equal(infer(itt, {}, Term::universe(7)).value(), Term::universe(8)));
}

TEST(Itt, PolymorphicIdentityTypeIsPredicative) {
  PtsSpec itt = itt_spec();
  Term ty = parse("Pi a:Type 0. a -> a");
  EXPECT_TRUE(alpha_equal(infer(itt, {}, ty).value(), Term::universe(1)));
  auto id = infer(itt, {}, parse("\\a:Type 0. \\x:a. x"));
  ASSERT_TRUE(id);
  EXPECT_TRUE(alpha_equal(*id, ty));
  // There is no impredicative Prop: Star is not a sort here.
  EXPECT_FALSE(infer(itt, {}, parse("/\\a. \\x:a. x")));
}

TEST(Itt, CumulativityIsOptIn) {
  Context ctx = context({{"x", "Type 0"}});
  Term x = Term::var(0, "x");
  auto strict = check(itt_spec(), ctx, x, Term::universe(1));
  ASSERT_FALSE(strict);
  EXPECT_EQ(strict.error().kind, DiagnosticKind::TypeMismatch);
  EXPECT_TRUE(check(itt_spec(3, true), ctx, x, Term::universe(1)));
  EXPECT_TRUE(check(*spec_by_name("itt-cumulative"), ctx, x, Term::universe(2)));
  EXPECT_FALSE(check(itt_spec(3, true), context({{"x", "Type 1"}}), x, Term::universe(0)));
}

TEST(Itt, SigmaOfUniverses) {
  PtsSpec itt = itt_spec();
  auto ty = infer(itt, {}, parse("Sig a:Type 0. a"));
  ASSERT_TRUE(ty);
  EXPECT_TRUE(alpha_equal(*ty, Term::universe(1)));
}

TEST(LambdaStar, TypeInType) {
  PtsSpec ls = lambda_star_spec();
  EXPECT_TRUE(ls.inconsistent);
  EXPECT_TRUE(check(ls, {}, Term::star(), Term::star()));
  EXPECT_TRUE(infer(ls, {}, parse("Pi a:Star. a -> a")));
}

TEST(TypeInType, StarIsNotAStarElsewhere) {
  std::vector<PtsSpec> specs;
  for (CubeCorner c : kAllCorners) specs.push_back(cube_spec(c));
  specs.push_back(itt_spec());
  for (const PtsSpec& s : specs) {
    auto r = check(s, {}, Term::star(), Term::star());
    EXPECT_FALSE(r) << s.name;
  }
}

TEST(Sigma, StrongImpredicativeSumsAreExcluded) {
  PtsSpec coc = coc_spec();
  EXPECT_FALSE(coc.sigma_rule_for(kBox, kStar));
  EXPECT_EQ(coc.sigma_rule_for(kStar, kStar), kStar);
  EXPECT_FALSE(infer(coc, {}, parse("Sig a:Star. a")));
}

}  // namespace
}  // namespace cube::testing
