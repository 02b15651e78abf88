#include <gtest/gtest.h>

#include "cube/reduction.hpp"
#include "cube/stdlib.hpp"
#include "helpers.hpp"

namespace cube::testing {
namespace {

Term def(const char* name) {
  auto d = stdlib_lookup(name);
  EXPECT_TRUE(d) << name;
  return d ? d->term : Term::star();
}

TEST(Numerals, Shape) {
  EXPECT_TRUE(alpha_equal(church_numeral(0), parse("\\f x. x")));
  EXPECT_TRUE(alpha_equal(church_numeral(3), parse("\\f x. f (f (f x))")));
}

TEST(Numerals, TypedOneInSystemF) {
  PtsSpec two = cube_spec(CubeCorner::Two);
  EXPECT_TRUE(alpha_equal(church_nat_type(), parse("Pi a:Star. (a -> a) -> a -> a")));
  EXPECT_TRUE(check(two, {}, typed_church_numeral(1), church_nat_type()));
  EXPECT_TRUE(check(two, {}, typed_church_numeral(4), church_nat_type()));
}

TEST(Decode, RoundTrip) {
  for (std::uint64_t k = 0; k <= 20; ++k) EXPECT_EQ(church_decode(church_numeral(k)).value(), k);
  EXPECT_EQ(church_decode(typed_church_numeral(6)).value(), 6u);
}

TEST(Decode, RejectsOtherShapes) {
  EXPECT_FALSE(church_decode(parse("\\x. x")));
  EXPECT_FALSE(church_decode(parse("\\f x. f")));
  EXPECT_FALSE(church_decode(parse("\\f x. x f")));
}

TEST(Arithmetic, AgainstMachineIntegers) {
  Term plus = def("plus"), times = def("times"), pow = def("pow"), pred = def("pred");
  for (std::uint64_t m = 0; m <= 6; ++m) {
    for (std::uint64_t n = 0; n <= 6; ++n) {
      Term cm = church_numeral(m), cn = church_numeral(n);
      EXPECT_EQ(church_decode(Term::apps(plus, {cm, cn})).value(), m + n);
      EXPECT_EQ(church_decode(Term::apps(times, {cm, cn})).value(), m * n);
      if (m <= 3 && n <= 3) {
        std::uint64_t p = 1;
        for (std::uint64_t i = 0; i < n; ++i) p *= m;
        EXPECT_EQ(church_decode(Term::apps(pow, {cm, cn})).value(), p) << m << "^" << n;
      }
    }
    EXPECT_EQ(church_decode(Term::app(pred, church_numeral(m))).value(), m == 0 ? 0 : m - 1);
  }
}

TEST(Arithmetic, SuccAndIsZero) {
  Term succ = def("succ"), iszero = def("iszero");
  EXPECT_EQ(church_decode(Term::app(succ, church_numeral(9))).value(), 10u);
  auto nf = [](const Term& t) { return normalize(t, Strategy::NormalOrder).outcome.term; };
  EXPECT_TRUE(alpha_equal(nf(Term::app(iszero, church_numeral(0))), nf(def("tru"))));
  EXPECT_TRUE(alpha_equal(nf(Term::app(iszero, church_numeral(2))), nf(def("fls"))));
}

TEST(Booleans, TruthTables) {
  Term t = def("tru"), f = def("fls");
  auto nf = [](const Term& x) { return normalize(x, Strategy::NormalOrder).outcome.term; };
  auto as_bool = [&](const Term& x) { return alpha_equal(nf(x), nf(t)); };
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      Term ta = a ? t : f, tb = b ? t : f;
      EXPECT_EQ(as_bool(Term::apps(def("and"), {ta, tb})), a && b);
      EXPECT_EQ(as_bool(Term::apps(def("or"), {ta, tb})), a || b);
    }
    EXPECT_EQ(as_bool(Term::app(def("not"), a ? t : f)), !a);
  }
}

TEST(Pairs, ChurchEncoded) {
  Term p = Term::apps(def("cons"), {church_numeral(1), church_numeral(2)});
  EXPECT_EQ(church_decode(Term::app(def("car"), p)).value(), 1u);
  EXPECT_EQ(church_decode(Term::app(def("cdr"), p)).value(), 2u);
}

TEST(Combinators, Behaviour) {
  Term e = Term::var(0, "e");
  auto i = combinator("I");
  ASSERT_TRUE(i);
  EXPECT_TRUE(alpha_equal(normalize(Term::app(i->term, e), Strategy::NormalOrder).outcome.term, e));
  auto omega = combinator("Omega");
  ASSERT_TRUE(omega);
  ReductionTrace tr = normalize(omega->term, Strategy::NormalOrder, 10);
  EXPECT_EQ(tr.outcome.kind, Outcome::Kind::LoopDetected);
  EXPECT_EQ(tr.outcome.period, 1u);
  EXPECT_TRUE(combinator("triple-omega"));
  EXPECT_TRUE(combinator("Y"));
  EXPECT_FALSE(combinator("plus"));
}

TEST(Stdlib, TypedEntriesCheckUnderTheirSpecs) {
  for (const NamedDef& d : stdlib()) {
    if (d.spec.empty()) continue;
    auto spec = spec_by_name(d.spec);
    ASSERT_TRUE(spec) << d.name;
    ASSERT_TRUE(d.type) << d.name;
    auto ok = check(*spec, {}, d.term, d.type);
    EXPECT_TRUE(ok) << d.name << ": " << (ok ? "" : format_diagnostic(ok.error()));
  }
}

TEST(Stdlib, TypedEntriesAreRejectedBelowTheirSpec) {
  // Each typed entry needs every rule of its corner except in the top corners.
  auto id = stdlib_lookup("id");
  ASSERT_TRUE(id);
  EXPECT_FALSE(check(cube_spec(CubeCorner::Arrow), {}, id->term, id->type));
  auto eq = stdlib_lookup("Eq");
  ASSERT_TRUE(eq);
  EXPECT_FALSE(infer(cube_spec(CubeCorner::P2), {}, eq->term));
}

TEST(Stdlib, EveryEntryIsDocumented) {
  for (const NamedDef& d : stdlib()) EXPECT_FALSE(d.doc.empty()) << d.name;
}

TEST(Stdlib, NaturalArithmeticIsTyped) {
  PtsSpec two = cube_spec(CubeCorner::Two);
  Term sum = Term::apps(def("nplus"), {typed_church_numeral(2), typed_church_numeral(3)});
  ASSERT_TRUE(check(two, {}, sum, church_nat_type()));
  EXPECT_EQ(church_decode(sum).value(), 5u);
  Term prod = Term::apps(def("ntimes"), {typed_church_numeral(3), typed_church_numeral(4)});
  EXPECT_EQ(church_decode(prod).value(), 12u);
}

}  // namespace
}  // namespace cube::testing
