#include "cube/logic.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace cube {

using FormulaPtr = std::shared_ptr<const Formula>;

Formula Formula::atom(std::string name, std::vector<std::string> args) {
  Formula f;
  f.kind = Kind::Atom;
  f.name = std::move(name);
  f.args = std::move(args);
  return f;
}

static Formula binary(Formula::Kind k, Formula a, Formula b) {
  Formula f;
  f.kind = k;
  f.lhs = std::make_shared<const Formula>(std::move(a));
  f.rhs = std::make_shared<const Formula>(std::move(b));
  return f;
}

Formula Formula::implies(Formula a, Formula b) { return binary(Kind::Implies, std::move(a), std::move(b)); }
Formula Formula::conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }

Formula Formula::negation(Formula a) {
  Formula f;
  f.kind = Kind::Not;
  f.lhs = std::make_shared<const Formula>(std::move(a));
  return f;
}

Formula Formula::falsum() {
  Formula f;
  f.kind = Kind::Falsum;
  return f;
}

Formula Formula::verum() {
  Formula f;
  f.kind = Kind::Verum;
  return f;
}

static Formula quantifier(Formula::Kind k, std::string var, std::string domain, Formula body) {
  Formula f;
  f.kind = k;
  f.name = std::move(var);
  f.domain = std::move(domain);
  f.lhs = std::make_shared<const Formula>(std::move(body));
  return f;
}

Formula Formula::forall(std::string var, std::string domain, Formula body) {
  return quantifier(Kind::Forall, std::move(var), std::move(domain), std::move(body));
}

Formula Formula::exists(std::string var, std::string domain, Formula body) {
  return quantifier(Kind::Exists, std::move(var), std::move(domain), std::move(body));
}

namespace {

int formula_level(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return 0;
    case Formula::Kind::Implies:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::And:
      return 3;
    default:
      return 4;
  }
}

std::string show(const Formula& f, int level) {
  std::string s;
  switch (f.kind) {
    case Formula::Kind::Atom:
      s = f.name;
      for (const std::string& a : f.args) s += " " + a;
      break;
    case Formula::Kind::Falsum:
      return "False";
    case Formula::Kind::Verum:
      return "True";
    case Formula::Kind::Not:
      return "~" + show(*f.lhs, 4);
    case Formula::Kind::Implies:
      s = show(*f.lhs, 2) + " -> " + show(*f.rhs, 1);
      break;
    case Formula::Kind::Or:
      s = show(*f.lhs, 2) + " | " + show(*f.rhs, 3);
      break;
    case Formula::Kind::And:
      s = show(*f.lhs, 3) + " & " + show(*f.rhs, 4);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      s = std::string(f.kind == Formula::Kind::Forall ? "forall " : "exists ") + f.name + ":" + f.domain + ". " +
          show(*f.lhs, 0);
      break;
  }
  if (formula_level(f) < level) return "(" + s + ")";
  return s;
}

// ---------------------------------------------------------------- formula parser

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Expected<Formula, std::string> run() {
    try {
      Formula f = formula();
      skip();
      if (i_ < text_.size()) error("unexpected '" + std::string(1, text_[i_]) + "'");
      return f;
    } catch (const std::string& e) {
      return unexpected(e);
    }
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw "formula column " + std::to_string(i_ + 1) + ": " + msg;
  }

  void skip() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  bool eat(std::string_view sym) {
    skip();
    if (text_.substr(i_, sym.size()) == sym) {
      i_ += sym.size();
      return true;
    }
    return false;
  }

  bool ident_char(std::size_t j) const {
    return j < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_' || text_[j] == '\'');
  }

  std::optional<std::string> ident() {
    skip();
    if (i_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
      return std::nullopt;
    }
    std::size_t j = i_;
    while (ident_char(j)) ++j;
    std::string w(text_.substr(i_, j - i_));
    i_ = j;
    return w;
  }

  bool keyword(std::string_view kw) {
    skip();
    if (text_.substr(i_, kw.size()) == kw && !ident_char(i_ + kw.size())) {
      i_ += kw.size();
      return true;
    }
    return false;
  }

  std::string expect_ident(const char* what) {
    auto w = ident();
    if (!w) error(std::string("expected ") + what);
    return *w;
  }

  Formula formula() {
    for (auto [kw, kind] : {std::pair{"forall", Formula::Kind::Forall}, std::pair{"exists", Formula::Kind::Exists}}) {
      if (keyword(kw)) {
        std::string var = expect_ident("a variable");
        if (!eat(":")) error("expected ':'");
        std::string dom = expect_ident("a domain");
        if (!eat(".")) error("expected '.'");
        Formula body = formula();
        return quantifier(kind, var, dom, body);
      }
    }
    Formula lhs = disjunction();
    if (eat("->")) return Formula::implies(lhs, formula());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (eat("|")) f = Formula::disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (eat("&")) f = Formula::conj(f, unary());
    return f;
  }

  Formula unary() {
    if (eat("~")) return Formula::negation(unary());
    if (eat("(")) {
      Formula f = formula();
      if (!eat(")")) error("expected ')'");
      return f;
    }
    auto w = ident();
    if (!w) error("expected a formula");
    if (*w == "False") return Formula::falsum();
    if (*w == "True") return Formula::verum();
    if (*w == "forall" || *w == "exists") error("quantifier needs parentheses here");
    std::vector<std::string> args;
    while (true) {
      std::size_t save = i_;
      auto a = ident();
      if (!a) break;
      if (*a == "forall" || *a == "exists" || *a == "False" || *a == "True") {
        i_ = save;
        break;
      }
      args.push_back(*a);
    }
    return Formula::atom(*w, std::move(args));
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------- encoding

struct AtomInfo {
  std::vector<std::string> domains;  // argument domains of a predicate
};

struct Encoder {
  std::vector<std::string> domains;
  std::vector<std::pair<std::string, AtomInfo>> atoms;
  std::optional<std::string> error;

  // Collect atoms; `bound` maps variables to their domains.
  void collect(const Formula& f, std::vector<std::pair<std::string, std::string>>& bound) {
    if (error) return;
    switch (f.kind) {
      case Formula::Kind::Atom: {
        AtomInfo info;
        for (const std::string& a : f.args) {
          auto it = std::find_if(bound.rbegin(), bound.rend(), [&](const auto& b) { return b.first == a; });
          if (it == bound.rend()) {
            error = "'" + a + "' is not bound by a quantifier";
            return;
          }
          info.domains.push_back(it->second);
        }
        auto it = std::find_if(atoms.begin(), atoms.end(), [&](const auto& p) { return p.first == f.name; });
        if (it == atoms.end()) {
          atoms.emplace_back(f.name, info);
        } else if (it->second.domains != info.domains) {
          error = "'" + f.name + "' is used with different argument types";
        }
        return;
      }
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        if (std::find(domains.begin(), domains.end(), f.domain) == domains.end()) domains.push_back(f.domain);
        bound.emplace_back(f.name, f.domain);
        collect(*f.lhs, bound);
        bound.pop_back();
        return;
      default:
        if (f.lhs) collect(*f.lhs, bound);
        if (f.rhs) collect(*f.rhs, bound);
    }
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out = domains;
    for (const auto& a : atoms) out.push_back(a.first);
    return out;
  }

  // `bound` lists bound variable names, innermost last.
  Term encode(const Formula& f, std::vector<std::string>& bound) const {
    const std::vector<std::string> ctx = names();
    auto ref = [&](const std::string& n) {
      auto p = static_cast<std::uint32_t>(std::find(ctx.begin(), ctx.end(), n) - ctx.begin());
      return Term::var(static_cast<std::uint32_t>(bound.size()) + static_cast<std::uint32_t>(ctx.size()) - 1 - p, n);
    };
    switch (f.kind) {
      case Formula::Kind::Atom: {
        Term t = ref(f.name);
        for (const std::string& a : f.args) {
          auto it = std::find(bound.rbegin(), bound.rend(), a);
          t = Term::app(t, Term::var(static_cast<std::uint32_t>(it - bound.rbegin()), a));
        }
        return t;
      }
      case Formula::Kind::Falsum:
        return Term::constant("Void");
      case Formula::Kind::Verum:
        return Term::constant("Unit");
      case Formula::Kind::Not:
        return Term::arrow(encode(*f.lhs, bound), Term::constant("Void"));
      case Formula::Kind::Implies:
        return Term::arrow(encode(*f.lhs, bound), encode(*f.rhs, bound));
      case Formula::Kind::And:
        return Term::product(encode(*f.lhs, bound), encode(*f.rhs, bound));
      case Formula::Kind::Or: {
        bound.push_back("\x01");  // the eliminator's result type c
        Term a = encode(*f.lhs, bound);
        Term b = encode(*f.rhs, bound);
        bound.pop_back();
        Term c = Term::var(0, "c");
        return Term::pi("c", Term::star(), Term::arrow(Term::arrow(a, c), Term::arrow(Term::arrow(b, c), c)));
      }
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        Term dom = ref(f.domain);
        bound.push_back(f.name);
        Term body = encode(*f.lhs, bound);
        bound.pop_back();
        return f.kind == Formula::Kind::Forall ? Term::pi(f.name, dom, body) : Term::sigma(f.name, dom, body);
      }
    }
    return Term();
  }
};

bool uses(const Formula& f, Formula::Kind k) {
  if (f.kind == k) return true;
  return (f.lhs && uses(*f.lhs, k)) || (f.rhs && uses(*f.rhs, k));
}

// ---------------------------------------------------------------- search

struct SimpleType;
using TypePtr = std::shared_ptr<const SimpleType>;

struct SimpleType {
  enum class Kind { Atom, Void, Unit, Arrow, Prod };
  Kind kind;
  std::size_t atom = 0;
  TypePtr a, b;
};

bool same_type(const TypePtr& x, const TypePtr& y) {
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case SimpleType::Kind::Atom:
      return x->atom == y->atom;
    case SimpleType::Kind::Arrow:
    case SimpleType::Kind::Prod:
      return same_type(x->a, y->a) && same_type(x->b, y->b);
    default:
      return true;
  }
}

class Searcher {
 public:
  Searcher(std::vector<std::string> atoms, std::size_t budget) : atoms_(std::move(atoms)), budget_(budget) {}

  Expected<TypePtr, FragmentUnsupported> lower(const Formula& f) const {
    auto mk = [](SimpleType::Kind k, TypePtr a = nullptr, TypePtr b = nullptr) {
      return std::make_shared<const SimpleType>(SimpleType{k, 0, std::move(a), std::move(b)});
    };
    switch (f.kind) {
      case Formula::Kind::Atom: {
        if (!f.args.empty()) return unexpected(FragmentUnsupported{"predicate atom"});
        auto p = static_cast<std::size_t>(std::find(atoms_.begin(), atoms_.end(), f.name) - atoms_.begin());
        return std::make_shared<const SimpleType>(SimpleType{SimpleType::Kind::Atom, p, nullptr, nullptr});
      }
      case Formula::Kind::Falsum:
        return mk(SimpleType::Kind::Void);
      case Formula::Kind::Verum:
        return mk(SimpleType::Kind::Unit);
      case Formula::Kind::Not: {
        auto a = lower(*f.lhs);
        if (!a) return a;
        return mk(SimpleType::Kind::Arrow, *a, mk(SimpleType::Kind::Void));
      }
      case Formula::Kind::Implies:
      case Formula::Kind::And: {
        auto a = lower(*f.lhs);
        if (!a) return a;
        auto b = lower(*f.rhs);
        if (!b) return b;
        return mk(f.kind == Formula::Kind::Implies ? SimpleType::Kind::Arrow : SimpleType::Kind::Prod, *a, *b);
      }
      case Formula::Kind::Or:
        return unexpected(FragmentUnsupported{"disjunction"});
      case Formula::Kind::Forall:
        return unexpected(FragmentUnsupported{"universal quantifier"});
      case Formula::Kind::Exists:
        return unexpected(FragmentUnsupported{"existential quantifier"});
    }
    return unexpected(FragmentUnsupported{"formula"});
  }

  std::optional<Term> prove(const TypePtr& goal, std::size_t depth) {
    if (budget_ == 0) return std::nullopt;
    --budget_;
    switch (goal->kind) {
      case SimpleType::Kind::Arrow: {
        Term dom = to_term(goal->a);
        hyps_.push_back(goal->a);
        auto body = prove(goal->b, depth);
        hyps_.pop_back();
        if (!body) return std::nullopt;
        return Term::lam("h" + std::to_string(hyps_.size()), dom, *body);
      }
      case SimpleType::Kind::Prod: {
        auto a = prove(goal->a, depth);
        if (!a) return std::nullopt;
        auto b = prove(goal->b, depth);
        if (!b) return std::nullopt;
        return Term::pair(*a, *b);
      }
      case SimpleType::Kind::Unit:
        return Term::constant("*");
      default:
        break;
    }
    if (depth == 0) return std::nullopt;
    std::vector<TypePtr> tried;
    for (std::size_t i = hyps_.size(); i-- > 0;) {
      const TypePtr h = hyps_[i];
      if (std::any_of(tried.begin(), tried.end(), [&](const TypePtr& t) { return same_type(t, h); })) continue;
      tried.push_back(h);
      std::vector<Elim> spine;
      Term head = Term::var(static_cast<std::uint32_t>(hyps_.size() - 1 - i), "h" + std::to_string(i));
      if (auto t = eliminate(head, h, goal, depth, spine)) return t;
    }
    return std::nullopt;
  }

 private:
  struct Elim {
    enum class Kind { Apply, Fst, Snd } kind;
    TypePtr arg;  // Apply: argument type
  };

  // Finds eliminations of `head : t` that reach `goal` (or Void, closed by absurd).
  std::optional<Term> eliminate(const Term& head, const TypePtr& t, const TypePtr& goal, std::size_t depth,
                                std::vector<Elim>& spine) {
    if (same_type(t, goal)) {
      if (auto r = close(head, spine, depth)) return r;
    } else if (t->kind == SimpleType::Kind::Void) {
      if (auto r = close(head, spine, depth)) {
        return Term::apps(Term::constant("absurd"), {to_term(goal), *r});
      }
    }
    if (t->kind == SimpleType::Kind::Arrow) {
      spine.push_back({Elim::Kind::Apply, t->a});
      auto r = eliminate(head, t->b, goal, depth, spine);
      spine.pop_back();
      return r;
    }
    if (t->kind == SimpleType::Kind::Prod) {
      spine.push_back({Elim::Kind::Fst, nullptr});
      auto r = eliminate(head, t->a, goal, depth, spine);
      spine.pop_back();
      if (r) return r;
      spine.push_back({Elim::Kind::Snd, nullptr});
      r = eliminate(head, t->b, goal, depth, spine);
      spine.pop_back();
      return r;
    }
    return std::nullopt;
  }

  std::optional<Term> close(const Term& head, const std::vector<Elim>& spine, std::size_t depth) {
    Term t = head;
    for (const Elim& e : spine) {
      switch (e.kind) {
        case Elim::Kind::Apply: {
          auto a = prove(e.arg, depth - 1);
          if (!a) return std::nullopt;
          t = Term::app(t, *a);
          break;
        }
        case Elim::Kind::Fst:
          t = Term::proj(1, t);
          break;
        case Elim::Kind::Snd:
          t = Term::proj(2, t);
          break;
      }
    }
    return t;
  }

  Term to_term(const TypePtr& t) const {
    switch (t->kind) {
      case SimpleType::Kind::Atom: {
        auto n = static_cast<std::uint32_t>(hyps_.size() + atoms_.size() - 1 - t->atom);
        return Term::var(n, atoms_[t->atom]);
      }
      case SimpleType::Kind::Void:
        return Term::constant("Void");
      case SimpleType::Kind::Unit:
        return Term::constant("Unit");
      case SimpleType::Kind::Arrow:
        return Term::arrow(to_term(t->a), to_term(t->b));
      case SimpleType::Kind::Prod:
        return Term::product(to_term(t->a), to_term(t->b));
    }
    return Term();
  }

  std::vector<std::string> atoms_;
  std::vector<TypePtr> hyps_;
  std::size_t budget_;
};

}  // namespace

std::string to_string(const Formula& f) { return show(f, 0); }

Expected<Formula, std::string> parse_formula(std::string_view text) { return FormulaParser(text).run(); }

Expected<EncodedFormula, std::string> formula_to_type(const Formula& f) {
  Encoder enc;
  std::vector<std::pair<std::string, std::string>> bound;
  enc.collect(f, bound);
  if (enc.error) return unexpected(*enc.error);
  for (const std::string& d : enc.domains) {
    if (std::any_of(enc.atoms.begin(), enc.atoms.end(), [&](const auto& a) { return a.first == d; })) {
      return unexpected("'" + d + "' is used both as a domain and as a proposition");
    }
  }
  EncodedFormula out;
  for (const std::string& d : enc.domains) out.context.push(d, Term::star());
  for (const auto& [name, info] : enc.atoms) {
    // P : D1 -> ... -> Dk -> Star, built at the current context depth.
    Term ty = Term::star();
    for (auto it = info.domains.rbegin(); it != info.domains.rend(); ++it) {
      auto p = static_cast<std::uint32_t>(std::find(enc.domains.begin(), enc.domains.end(), *it) - enc.domains.begin());
      Term dom = Term::var(static_cast<std::uint32_t>(out.context.size()) - 1 - p, *it);
      ty = Term::arrow(dom, ty);
    }
    out.context.push(name, ty);
  }
  std::vector<std::string> scope;
  out.type = enc.encode(f, scope);
  return out;
}

Expected<Ok, Diagnostic> check_proof(const PtsSpec& spec, const Formula& f, const Term& proof) {
  auto enc = formula_to_type(f);
  if (!enc) {
    return unexpected(Diagnostic{DiagnosticKind::UnboundVariable, {}, "FORMULA", enc.error(), {}, {},
                                 std::nullopt, {}, std::nullopt});
  }
  if (auto wf = wf_context(spec, enc->context); !wf) return unexpected(std::move(wf).error());
  return check(spec, enc->context, proof, enc->type);
}

Expected<std::optional<Term>, FragmentUnsupported> inhabit(const Formula& f, std::size_t depth,
                                                           const InhabitOptions& options) {
  if (depth > options.max_depth) depth = options.max_depth;
  auto enc = formula_to_type(f);
  if (!enc) return unexpected(FragmentUnsupported{enc.error()});
  Searcher search(enc->context.names(), options.budget);
  auto goal = search.lower(f);
  if (!goal) return unexpected(std::move(goal).error());
  return search.prove(*goal, depth);
}

PtsSpec formula_spec(const Formula& f) {
  bool quantified = uses(f, Formula::Kind::Forall) || uses(f, Formula::Kind::Exists);
  if (quantified) return cube_spec(CubeCorner::P2);
  if (uses(f, Formula::Kind::Or)) return cube_spec(CubeCorner::Two);
  return cube_spec(CubeCorner::Arrow);
}

const std::vector<ProofEntry>& proof_library() {
  static const std::vector<ProofEntry> entries = {
      {"identity", "A -> A", "\\x:A. x", "arrow"},
      {"and-commutes", "A & B -> B & A", "\\p:A & B. (p.2, p.1)", "arrow"},
      {"modus-ponens", "(A -> B) -> A -> B", "\\f:A -> B. \\a:A. f a", "arrow"},
      {"syllogism", "(A -> B) -> (B -> C) -> A -> C", "\\f:A -> B. \\g:B -> C. \\a:A. g (f a)", "arrow"},
      {"weakening", "A -> B -> A", "\\a:A. \\b:B. a", "arrow"},
      {"distribution", "(A -> B -> C) -> (A -> B) -> A -> C",
       "\\f:A -> B -> C. \\g:A -> B. \\a:A. f a (g a)", "arrow"},
      {"curry", "(A & B -> C) -> A -> B -> C", "\\f:A & B -> C. \\a:A. \\b:B. f (a, b)", "arrow"},
      {"uncurry", "(A -> B -> C) -> A & B -> C", "\\f:A -> B -> C. \\p:A & B. f p.1 p.2", "arrow"},
      {"contraposition", "(A -> B) -> ~B -> ~A", "\\f:A -> B. \\nb:B -> Void. \\a:A. nb (f a)", "arrow"},
      {"double-negation-intro", "A -> ~~A", "\\a:A. \\na:A -> Void. na a", "arrow"},
      {"triple-negation", "~~~A -> ~A",
       "\\h:((A -> Void) -> Void) -> Void. \\a:A. h (\\k:A -> Void. k a)", "arrow"},
      {"ex-falso", "False -> A", "absurd A", "arrow"},
      {"truth", "True", "*", "arrow"},
      {"or-intro-left", "A -> A | B", "\\a:A. /\\c. \\l:A -> c. \\r:B -> c. l a", "two"},
      {"or-commutes", "A | B -> B | A",
       "\\o:Pi c:Star. (A -> c) -> (B -> c) -> c. /\\c. \\l:B -> c. \\r:A -> c. o c r l", "two"},
      {"forall-refl", "forall x:D. P x -> P x", "\\x:D. \\h:P x. h", "P"},
      {"forall-and-elim", "(forall x:D. P x & Q x) -> forall y:D. P y",
       "\\h:(Pi x:D. P x & Q x). \\y:D. (h y).1", "P"},
      {"exists-intro", "forall x:D. P x -> exists y:D. P y", "\\x:D. \\h:P x. (x, h as Sig y:D. P y)", "P"},
      {"exists-and-elim", "(exists x:D. P x & Q x) -> exists x:D. Q x",
       "\\e:(Sig x:D. P x & Q x). (e.1, e.2.2 as Sig x:D. Q x)", "P"},
  };
  return entries;
}

}  // namespace cube
