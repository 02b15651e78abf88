#include "cube/stdlib.hpp"

#include <stdexcept>

#include "cube/kernel.hpp"
#include "cube/spec.hpp"
#include "cube/surface.hpp"

namespace cube {

namespace {

struct Entry {
  const char* doc;
  const char* def;
};

// clang-format off
constexpr Entry kEntries[] = {
    {"identity", "def I := \\x. x"},
    {"constant function", "def K := \\x y. x"},
    {"substitution combinator", "def S := \\x y z. x z (y z)"},
    {"self application", "def omega := \\x. x x"},
    {"the looping term omega omega", "def Omega := omega omega"},
    {"self application that grows under reduction", "def triple_omega := \\x. x x x"},
    {"Curry's fixed-point combinator", "def Y := \\f. (\\x. f (x x)) (\\x. f (x x))"},
    {"Turing's fixed-point combinator", "def Theta := (\\x f. f (x x f)) (\\x f. f (x x f))"},

    {"Church true", "def tru := \\t f. t"},
    {"Church false", "def fls := \\t f. f"},
    {"boolean conjunction", "def and := \\p q. p q p"},
    {"boolean disjunction", "def or := \\p q. p p q"},
    {"boolean negation", "def not := \\p t f. p f t"},
    {"conditional", "def ite := \\p a b. p a b"},

    {"Church zero", "def zero := \\f x. x"},
    {"successor", "def succ := \\n f x. f (n f x)"},
    {"addition", "def plus := \\m n f x. m f (n f x)"},
    {"multiplication", "def times := \\m n f. m (n f)"},
    {"exponentiation m^n", "def pow := \\m n f x. n m f x"},
    {"predecessor", "def pred := \\n f x. n (\\g h. h (g f)) (\\u. x) (\\u. u)"},
    {"zero test", "def iszero := \\n. n (\\x. fls) tru"},
    {"Church pair", "def cons := \\a b s. s a b"},
    {"first component of a Church pair", "def car := \\p. p tru"},
    {"second component of a Church pair", "def cdr := \\p. p fls"},

    {"polymorphic identity", "def id in two : Pi a:Star. a -> a := /\\a. \\x:a. x"},
    {"polymorphic constant function",
     "def const in two : Pi a:Star. Pi b:Star. a -> b -> a := /\\a. /\\b. \\x:a. \\y:b. x"},
    {"polymorphic composition",
     "def compose in two : Pi a:Star. Pi b:Star. Pi c:Star. (b -> c) -> (a -> b) -> a -> c\n"
     "  := /\\a. /\\b. /\\c. \\g:b -> c. \\f:a -> b. \\x:a. g (f x)"},
    {"impredicative naturals", "def Nat in two : Star := forall a. (a -> a) -> a -> a"},
    {"typed zero", "def nzero in two : Nat := /\\a. \\f:a -> a. \\x:a. x"},
    {"typed successor", "def nsucc in two : Nat -> Nat := \\n:Nat. /\\a. \\f:a -> a. \\x:a. f (n a f x)"},
    {"typed addition",
     "def nplus in two : Nat -> Nat -> Nat := \\m:Nat. \\n:Nat. /\\a. \\f:a -> a. \\x:a. m a f (n a f x)"},
    {"typed multiplication",
     "def ntimes in two : Nat -> Nat -> Nat := \\m:Nat. \\n:Nat. /\\a. \\f:a -> a. m a (n a f)"},
    {"impredicative booleans", "def Bool2 in two : Star := forall a. a -> a -> a"},
    {"typed true", "def btrue in two : Bool2 := /\\a. \\x:a. \\y:a. x"},
    {"typed false", "def bfalse in two : Bool2 := /\\a. \\x:a. \\y:a. y"},
    {"impredicative falsity", "def Bot in two : Star := forall a. a"},

    {"endomorphism type operator", "def Endo in weak-omega : Star -> Star := \\a:Star. a -> a"},
    {"type operator iteration",
     "def Twice in weak-omega : (Star -> Star) -> Star -> Star := \\f:Star -> Star. \\a:Star. f (f a)"},
    {"polymorphic identity at an operator type", "def idEndo in omega : Pi a:Star. Endo a := /\\a. \\x:a. x"},

    {"Leibniz equality", "def Eq in coc : Pi a:Star. a -> a -> Star := /\\a. \\x:a. \\y:a. Pi P:a -> Star. P x -> P y"},
    {"reflexivity", "def refl in coc : Pi a:Star. Pi x:a. Eq a x x := /\\a. \\x:a. \\P:a -> Star. \\h:P x. h"},
    {"symmetry of Leibniz equality",
     "def sym in coc : Pi a:Star. Pi x:a. Pi y:a. Eq a x y -> Eq a y x\n"
     "  := /\\a. \\x:a. \\y:a. \\e:Eq a x y. e (\\z:a. Eq a z x) (refl a x)"},
    {"transitivity of Leibniz equality",
     "def trans in coc : Pi a:Star. Pi x:a. Pi y:a. Pi z:a. Eq a x y -> Eq a y z -> Eq a x z\n"
     "  := /\\a. \\x:a. \\y:a. \\z:a. \\p:Eq a x y. \\q:Eq a y z. q (\\w:a. Eq a x w) p"},
    {"impredicative existential",
     "def Ex in coc : Pi a:Star. (a -> Star) -> Star := /\\a. \\P:a -> Star. Pi c:Star. (Pi x:a. P x -> c) -> c"},
    {"existential introduction",
     "def pack in coc : Pi a:Star. Pi P:a -> Star. Pi x:a. P x -> Ex a P\n"
     "  := /\\a. \\P:a -> Star. \\x:a. \\h:P x. /\\c. \\k:Pi y:a. P y -> c. k x h"},

    {"a number paired with a proof about it",
     "def reflPair in coc : Sig n:Nat. Eq Nat n n := (nzero, refl Nat nzero as Sig n:Nat. Eq Nat n n)"},
};
// clang-format on

std::string build_source() {
  std::string out;
  for (const Entry& e : kEntries) {
    out += "-- ";
    out += e.doc;
    out += "\n";
    out += e.def;
    out += "\n";
  }
  return out;
}

std::vector<NamedDef> build_library() {
  static const std::string source = build_source();
  auto file = parse_defs(source, ParseEnv{{}, {}, {}, false, "<stdlib>", {}});
  if (!file) throw std::logic_error("standard library does not parse: " + file.error().format());
  std::vector<NamedDef> out;
  std::size_t i = 0;
  for (const DefEntry& e : file->entries) {
    out.push_back({e.name, e.term, e.spec.value_or(""), e.type, kEntries[i++].doc});
  }
  return out;
}

}  // namespace

std::string_view stdlib_source() {
  static const std::string source = build_source();
  return source;
}

const std::vector<NamedDef>& stdlib() {
  static const std::vector<NamedDef> library = build_library();
  return library;
}

std::optional<NamedDef> stdlib_lookup(std::string_view name) {
  for (const NamedDef& d : stdlib()) {
    if (d.name == name) return d;
  }
  return std::nullopt;
}

Term church_numeral(std::uint64_t n) {
  Term body = Term::var(0, "x");
  for (std::uint64_t i = 0; i < n; ++i) body = Term::app(Term::var(1, "f"), body);
  return Term::lam("f", Term::lam("x", body));
}

Term church_nat_type() {
  // Pi a:Star. (a -> a) -> a -> a
  Term a = Term::var(0, "a");
  return Term::pi("a", Term::star(), Term::arrow(Term::arrow(a, a), Term::arrow(a, a)));
}

Term typed_church_numeral(std::uint64_t n) {
  Term body = Term::var(0, "x");
  for (std::uint64_t i = 0; i < n; ++i) body = Term::app(Term::var(1, "f"), body);
  Term endo = Term::arrow(Term::var(0, "a"), Term::var(0, "a"));
  return Term::lam("a", Term::star(), Term::lam("f", endo, Term::lam("x", Term::var(1, "a"), body)));
}

Expected<std::uint64_t, NotANumeral> church_decode(const Term& t, std::size_t fuel) {
  if (t.free_bound() != 0) return unexpected(NotANumeral{"term is not closed"});
  ReductionTrace trace = normalize(t, Strategy::NormalOrder, fuel, NormalizeOptions{0, false});
  if (!trace.normalized()) return unexpected(NotANumeral{"no normal form within fuel"});
  Term cur = trace.outcome.term;
  // A typed numeral first abstracts over its carrier type.
  if (cur.is(Tag::Lam) && cur.annotation().is(Tag::Sort) && cur.body().is(Tag::Lam)) cur = cur.body();
  if (!cur.is(Tag::Lam) || !cur.body().is(Tag::Lam)) return unexpected(NotANumeral{"expected \\f x. ..."});
  cur = cur.body().body();
  std::uint64_t n = 0;
  while (cur.is(Tag::App) && cur.fun().is(Tag::Var) && cur.fun().index() == 1) {
    ++n;
    cur = cur.arg();
  }
  if (!(cur.is(Tag::Var) && cur.index() == 0)) return unexpected(NotANumeral{"body is not f (f (... x))"});
  return n;
}

std::optional<NamedDef> combinator(std::string_view name) {
  std::string key(name);
  for (char& c : key) {
    if (c == '-') c = '_';
  }
  static const char* const kNames[] = {"I", "K", "S", "omega", "Omega", "Y", "Theta", "triple_omega"};
  for (const char* n : kNames) {
    if (key == n) return stdlib_lookup(key);
  }
  return std::nullopt;
}

}  // namespace cube
