#include "cube/ccc.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "cube/reduction.hpp"
#include "cube/surface.hpp"

namespace cube {

// ---------------------------------------------------------------- objects

CatObject CatObject::terminal() { return CatObject(); }

CatObject CatObject::base(std::string name) {
  CatObject o;
  o.kind_ = Kind::Base;
  o.name_ = std::move(name);
  return o;
}

CatObject CatObject::product(CatObject left, CatObject right) {
  CatObject o;
  o.kind_ = Kind::Product;
  o.left_ = std::make_shared<const CatObject>(std::move(left));
  o.right_ = std::make_shared<const CatObject>(std::move(right));
  return o;
}

CatObject CatObject::exponential(CatObject base, CatObject exponent) {
  CatObject o;
  o.kind_ = Kind::Exponential;
  o.left_ = std::make_shared<const CatObject>(std::move(base));
  o.right_ = std::make_shared<const CatObject>(std::move(exponent));
  return o;
}

bool operator==(const CatObject& a, const CatObject& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case CatObject::Kind::Terminal:
      return true;
    case CatObject::Kind::Base:
      return a.name_ == b.name_;
    default:
      return *a.left_ == *b.left_ && *a.right_ == *b.right_;
  }
}

std::string CatObject::to_string() const {
  switch (kind_) {
    case Kind::Terminal:
      return "1";
    case Kind::Base:
      return name_;
    case Kind::Product:
      return "(" + left_->to_string() + " x " + right_->to_string() + ")";
    case Kind::Exponential:
      return right_->kind_ == Kind::Base || right_->kind_ == Kind::Terminal
                 ? left_->to_string() + "^" + right_->to_string()
                 : left_->to_string() + "^(" + right_->to_string() + ")";
  }
  return "?";
}

Term object_type(const CatObject& x) {
  switch (x.kind()) {
    case CatObject::Kind::Terminal:
      return Term::constant("Unit");
    case CatObject::Kind::Base:
      return Term::constant(x.name());
    case CatObject::Kind::Product:
      return Term::product(object_type(x.left()), object_type(x.right()));
    case CatObject::Kind::Exponential:
      return Term::arrow(object_type(x.right()), object_type(x.left()));
  }
  return Term();
}

Expected<CatObject, UnsupportedType> syn_object(const Term& tau) {
  switch (tau.tag()) {
    case Tag::Const:
      if (tau.name() == "Unit") return CatObject::terminal();
      if (tau.name() == "Void" || tau.name() == "Bool" || tau.name() == "*") {
        return unexpected(UnsupportedType{"'" + tau.name() + "' has no object"});
      }
      return CatObject::base(tau.name());
    case Tag::Pi:
    case Tag::Sigma: {
      if (occurs_free(tau.codomain(), 0)) return unexpected(UnsupportedType{"dependent type"});
      auto a = syn_object(tau.domain());
      if (!a) return a;
      auto b = syn_object(shift(tau.codomain(), 0, -1));
      if (!b) return b;
      return tau.is(Tag::Pi) ? CatObject::exponential(*b, *a) : CatObject::product(*a, *b);
    }
    default:
      return unexpected(UnsupportedType{"not a simple type"});
  }
}

// ---------------------------------------------------------------- morphisms

std::string Morphism::to_string() const {
  return "x:" + dom.to_string() + " |- " + print_term(body, {"x"}) + " : " + cod.to_string();
}

namespace {

// body[x := replacement], both over the single free variable.
Term plug(const Term& body, const Term& replacement) { return substitute(body, 0, replacement); }

Unexpected<CccError> mismatch(const CatObject& want, const CatObject& got) {
  return unexpected(CccError{CccError::Kind::DomainMismatch,
                             "expected " + want.to_string() + ", found " + got.to_string()});
}

}  // namespace

Morphism identity(const CatObject& x) { return {x, x, Term::var(0, "x")}; }

Expected<Morphism, CccError> compose(const Morphism& f, const Morphism& g) {
  if (!(g.cod == f.dom)) return mismatch(f.dom, g.cod);
  return Morphism{g.dom, f.cod, plug(f.body, g.body)};
}

Expected<Morphism, CccError> pairing(const Morphism& f, const Morphism& g) {
  if (!(f.dom == g.dom)) return mismatch(f.dom, g.dom);
  return Morphism{f.dom, CatObject::product(f.cod, g.cod), Term::pair(f.body, g.body)};
}

Morphism proj1(const CatObject& x, const CatObject& y) {
  return {CatObject::product(x, y), x, Term::proj(1, Term::var(0, "x"))};
}

Morphism proj2(const CatObject& x, const CatObject& y) {
  return {CatObject::product(x, y), y, Term::proj(2, Term::var(0, "x"))};
}

Morphism to_terminal(const CatObject& x) { return {x, CatObject::terminal(), Term::constant("*")}; }

Expected<Morphism, CccError> curry(const Morphism& f) {
  if (f.dom.kind() != CatObject::Kind::Product) {
    return unexpected(CccError{CccError::Kind::NotAProductDomain, "domain " + f.dom.to_string() + " is not a product"});
  }
  const CatObject& x = f.dom.left();
  const CatObject& y = f.dom.right();
  // \y. f[x := (x, y)], with the outer x now of type X.
  Term body = substitute(shift(f.body, 0, 1), 1, Term::pair(Term::var(1, "x"), Term::var(0, "y")));
  return Morphism{x, CatObject::exponential(f.cod, y), Term::lam("y", object_type(y), body)};
}

Expected<Morphism, CccError> uncurry(const Morphism& h) {
  if (h.cod.kind() != CatObject::Kind::Exponential) {
    return unexpected(CccError{CccError::Kind::NotAnExponential, "codomain " + h.cod.to_string() + " is not an exponential"});
  }
  Term x = Term::var(0, "x");
  Term body = Term::app(plug(h.body, Term::proj(1, x)), Term::proj(2, x));
  return Morphism{CatObject::product(h.dom, h.cod.right()), h.cod.left(), body};
}

Morphism apply_morphism(const CatObject& z, const CatObject& y) {
  Term x = Term::var(0, "x");
  return {CatObject::product(CatObject::exponential(z, y), y), z, Term::app(Term::proj(1, x), Term::proj(2, x))};
}

Morphism product_map(const Morphism& f, const Morphism& g) {
  Term x = Term::var(0, "x");
  return {CatObject::product(f.dom, g.dom), CatObject::product(f.cod, g.cod),
          Term::pair(plug(f.body, Term::proj(1, x)), plug(g.body, Term::proj(2, x)))};
}

// ---------------------------------------------------------------- presentations

namespace {

bool valid_object_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  }
  return !reserved_words().count(s);
}

}  // namespace

Expected<Presentation, std::string> parse_presentation(std::string_view text) {
  Presentation p;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  auto names_taken = [&](const std::string& n) {
    return std::find(p.objects.begin(), p.objects.end(), n) != p.objects.end() ||
           std::any_of(p.generators.begin(), p.generators.end(), [&](const Generator& g) { return g.name == n; });
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find("--"));
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    auto fail = [&](const std::string& msg) { return unexpected("line " + std::to_string(line_no) + ": " + msg); };
    if (head == "object") {
      std::string name, extra;
      if (!(words >> name) || (words >> extra)) return fail("expected 'object <name>'");
      if (!valid_object_name(name)) return fail("invalid object name '" + name + "'");
      if (names_taken(name)) return fail("'" + name + "' is declared twice");
      p.objects.push_back(name);
    } else if (head == "gen") {
      auto colon = line.find(':');
      if (colon == std::string::npos) return fail("expected 'gen <name> : <dom> -> <cod>'");
      std::istringstream lhs(line.substr(0, colon));
      std::string kw, name, extra;
      lhs >> kw;
      if (!(lhs >> name) || (lhs >> extra)) return fail("expected one generator name before ':'");
      if (!valid_object_name(name)) return fail("invalid generator name '" + name + "'");
      if (names_taken(name)) return fail("'" + name + "' is declared twice");
      ParseEnv env;
      env.constants.insert(p.objects.begin(), p.objects.end());
      env.allow_free = false;
      auto ty = parse_term(line.substr(colon + 1), env);
      if (!ty) return fail(ty.error().message);
      const Term& t = ty->term;
      if (!t.is(Tag::Pi) || occurs_free(t.codomain(), 0)) return fail("generator type must be '<dom> -> <cod>'");
      auto dom = syn_object(t.domain());
      auto cod = syn_object(shift(t.codomain(), 0, -1));
      if (!dom) return fail(dom.error().message);
      if (!cod) return fail(cod.error().message);
      p.generators.push_back({name, *dom, *cod});
    } else {
      return fail("expected 'object' or 'gen'");
    }
  }
  return p;
}

PtsSpec lang_of(const Presentation& p) {
  PtsSpec spec = cube_spec(CubeCorner::Arrow);
  spec.name = "lang";
  for (const std::string& o : p.objects) spec.constants.push_back({o, Term::star()});
  for (const Generator& g : p.generators) {
    spec.constants.push_back({g.name, Term::arrow(object_type(g.dom), object_type(g.cod))});
  }
  return spec;
}

Expected<Presentation, std::string> syn_of(const PtsSpec& theory) {
  Presentation p;
  for (const ConstantDecl& c : theory.constants) {
    if (c.type.is(Tag::Sort) && c.type.sort_id().is_star()) {
      p.objects.push_back(c.name);
    }
  }
  for (const ConstantDecl& c : theory.constants) {
    if (c.type.is(Tag::Sort)) continue;
    auto obj = syn_object(c.type);
    if (!obj) return unexpected("constant " + c.name + ": " + obj.error().message);
    if (obj->kind() != CatObject::Kind::Exponential) {
      return unexpected("constant " + c.name + " is not an arrow");
    }
    p.generators.push_back({c.name, obj->right(), obj->left()});
  }
  return p;
}

Morphism generator_morphism(const Generator& g) {
  return {g.dom, g.cod, Term::app(Term::constant(g.name), Term::var(0, "x"))};
}

Expected<Ok, Diagnostic> check_morphism(const PtsSpec& theory, const Morphism& m) {
  Context ctx;
  ctx.push("x", object_type(m.dom));
  return check(theory, ctx, m.body, object_type(m.cod));
}

// ---------------------------------------------------------------- βη oracle

namespace {

struct OracleFailure {
  std::string message;
};

class EtaNormalizer {
 public:
  explicit EtaNormalizer(const Presentation& p) : p_(p) {}

  // `t` is β-normal; `ctx` lists variable types, innermost last.
  Term eta(const Term& t, const CatObject& type, std::vector<CatObject>& ctx) {
    switch (type.kind()) {
      case CatObject::Kind::Terminal:
        return Term::constant("*");
      case CatObject::Kind::Exponential:
        if (t.is(Tag::Lam)) {
          ctx.push_back(type.right());
          Term body = eta(t.body(), type.left(), ctx);
          ctx.pop_back();
          return Term::lam("y", object_type(type.right()), body);
        }
        break;
      case CatObject::Kind::Product:
        if (t.is(Tag::Pair)) return Term::pair(eta(t.first(), type.left(), ctx), eta(t.second(), type.right(), ctx));
        break;
      case CatObject::Kind::Base:
        break;
    }
    auto [n, ty] = neutral(t, ctx);
    if (!(ty == type)) throw OracleFailure{"type mismatch at " + type.to_string()};
    return expand(n, type, ctx);
  }

 private:
  // η-expands an already normal neutral term.
  Term expand(const Term& n, const CatObject& type, std::vector<CatObject>& ctx) {
    switch (type.kind()) {
      case CatObject::Kind::Terminal:
        return Term::constant("*");
      case CatObject::Kind::Base:
        return n;
      case CatObject::Kind::Product:
        return Term::pair(expand(Term::proj(1, n), type.left(), ctx), expand(Term::proj(2, n), type.right(), ctx));
      case CatObject::Kind::Exponential: {
        ctx.push_back(type.right());
        Term arg = expand(Term::var(0, "y"), type.right(), ctx);
        Term body = expand(Term::app(shift(n, 0, 1), arg), type.left(), ctx);
        ctx.pop_back();
        return Term::lam("y", object_type(type.right()), body);
      }
    }
    return n;
  }

  std::pair<Term, CatObject> neutral(const Term& t, std::vector<CatObject>& ctx) {
    switch (t.tag()) {
      case Tag::Var:
        if (t.index() >= ctx.size()) throw OracleFailure{"unbound variable"};
        return {t, ctx[ctx.size() - 1 - t.index()]};
      case Tag::Const:
        for (const Generator& g : p_.generators) {
          if (g.name == t.name()) return {t, CatObject::exponential(g.cod, g.dom)};
        }
        throw OracleFailure{"unknown constant " + t.name()};
      case Tag::App: {
        auto [f, ty] = neutral(t.fun(), ctx);
        if (ty.kind() != CatObject::Kind::Exponential) throw OracleFailure{"application of a non-function"};
        return {Term::app(f, eta(t.arg(), ty.right(), ctx)), ty.left()};
      }
      case Tag::Proj: {
        auto [q, ty] = neutral(t.pair_term(), ctx);
        if (ty.kind() != CatObject::Kind::Product) throw OracleFailure{"projection of a non-pair"};
        return {Term::proj(t.which(), q), t.which() == 1 ? ty.left() : ty.right()};
      }
      default:
        throw OracleFailure{"term is not neutral: " + print_term(t)};
    }
  }

  const Presentation& p_;
};

}  // namespace

Expected<Term, std::string> beta_eta_normal(const Presentation& p, const Morphism& m) {
  ReductionTrace tr = normalize(m.body, Strategy::NormalOrder, kDefaultFuel, NormalizeOptions{0, false});
  if (!tr.normalized()) return unexpected(std::string("no β-normal form within fuel"));
  try {
    EtaNormalizer n(p);
    std::vector<CatObject> ctx{m.dom};
    return n.eta(tr.outcome.term, m.cod, ctx);
  } catch (const OracleFailure& f) {
    return unexpected(f.message);
  }
}

bool morphisms_equal(const Presentation& p, const Morphism& a, const Morphism& b) {
  if (!(a.dom == b.dom) || !(a.cod == b.cod)) return false;
  auto na = beta_eta_normal(p, a);
  auto nb = beta_eta_normal(p, b);
  return na && nb && alpha_equal(*na, *nb);
}

// ---------------------------------------------------------------- random morphisms

MorphismGenerator::MorphismGenerator(Presentation p, std::uint64_t seed, std::size_t max_size)
    : p_(std::move(p)), rng_(seed), max_size_(max_size) {}

CatObject MorphismGenerator::object(int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 2);
  int k = pick(rng_);
  if (k >= 3 && depth > 0) {
    CatObject a = object(depth - 1);
    CatObject b = object(depth - 1);
    return k == 3 || k == 5 ? CatObject::product(a, b) : CatObject::exponential(a, b);
  }
  if (p_.objects.empty() || k == 0) return CatObject::terminal();
  std::uniform_int_distribution<std::size_t> base(0, p_.objects.size() - 1);
  return CatObject::base(p_.objects[base(rng_)]);
}

std::optional<Term> MorphismGenerator::eliminate(const Term& head, const CatObject& type, const CatObject& target,
                                                 std::vector<CatObject>& ctx, int size) {
  std::bernoulli_distribution stop(0.7);
  if (type == target && (type.kind() == CatObject::Kind::Base || stop(rng_))) return head;
  if (size <= 0) return std::nullopt;
  switch (type.kind()) {
    case CatObject::Kind::Exponential: {
      auto arg = term(type.right(), ctx, size - 1);
      if (!arg) return std::nullopt;
      return eliminate(Term::app(head, *arg), type.left(), target, ctx, size - 1);
    }
    case CatObject::Kind::Product: {
      int first = std::bernoulli_distribution(0.5)(rng_) ? 1 : 2;
      for (int which : {first, 3 - first}) {
        const CatObject& part = which == 1 ? type.left() : type.right();
        if (auto r = eliminate(Term::proj(which, head), part, target, ctx, size - 1)) return r;
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::optional<Term> MorphismGenerator::term(const CatObject& target, std::vector<CatObject>& ctx, int size) {
  enum Move { Intro, Var, Gen, Redex };
  std::vector<Move> moves = {Intro, Var, Var, Gen, Redex};
  std::shuffle(moves.begin(), moves.end(), rng_);
  for (Move mv : moves) {
    switch (mv) {
      case Intro:
        if (target.kind() == CatObject::Kind::Terminal) return Term::constant("*");
        if (size <= 0) break;
        if (target.kind() == CatObject::Kind::Exponential) {
          ctx.push_back(target.right());
          auto body = term(target.left(), ctx, size - 1);
          ctx.pop_back();
          if (body) return Term::lam("y", object_type(target.right()), *body);
        } else if (target.kind() == CatObject::Kind::Product) {
          auto a = term(target.left(), ctx, size / 2);
          auto b = a ? term(target.right(), ctx, size / 2) : std::nullopt;
          if (a && b) return Term::pair(*a, *b);
        }
        break;
      case Var: {
        std::vector<std::size_t> order(ctx.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng_);
        for (std::size_t i : order) {
          Term head = Term::var(static_cast<std::uint32_t>(ctx.size() - 1 - i), "x");
          const CatObject type = ctx[i];  // ctx may reallocate during the search
          if (auto r = eliminate(head, type, target, ctx, size)) return r;
        }
        break;
      }
      case Gen: {
        if (p_.generators.empty() || size <= 0) break;
        std::uniform_int_distribution<std::size_t> pick(0, p_.generators.size() - 1);
        const Generator& g = p_.generators[pick(rng_)];
        if (auto r = eliminate(Term::constant(g.name), CatObject::exponential(g.cod, g.dom), target, ctx, size)) {
          return r;
        }
        break;
      }
      case Redex: {
        if (size < 3) break;
        CatObject a = object(1);
        ctx.push_back(a);
        auto body = term(target, ctx, size / 2);
        ctx.pop_back();
        if (!body) break;
        auto arg = term(a, ctx, size / 2);
        if (!arg) break;
        return Term::app(Term::lam("y", object_type(a), *body), *arg);
      }
    }
  }
  return std::nullopt;
}

std::optional<Morphism> MorphismGenerator::morphism(const CatObject& dom, const CatObject& cod) {
  std::uniform_int_distribution<int> size(1, static_cast<int>(max_size_));
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<CatObject> ctx{dom};
    if (auto t = term(cod, ctx, size(rng_))) return Morphism{dom, cod, *t};
  }
  return std::nullopt;
}

Morphism MorphismGenerator::any() {
  while (true) {
    CatObject dom = object(1);
    CatObject cod = object(1);
    if (auto m = morphism(dom, cod)) return *m;
  }
}

// ---------------------------------------------------------------- laws

std::vector<LawResult> check_laws(const Presentation& p, std::size_t cases, std::uint64_t seed) {
  MorphismGenerator gen(p, seed);
  PtsSpec theory = lang_of(p);
  std::vector<LawResult> out;

  auto eq = [&](const Morphism& a, const Morphism& b) { return morphisms_equal(p, a, b); };
  auto typed = [&](const Morphism& m) { return static_cast<bool>(check_morphism(theory, m)); };
  // Draws a morphism dom -> cod, retrying with fresh endpoints when needed.
  auto draw = [&](const CatObject& dom, const CatObject& cod) { return gen.morphism(dom, cod); };

  auto run = [&](std::string name, const std::function<std::optional<std::string>(bool&)>& one) {
    LawResult r;
    r.law = std::move(name);
    std::size_t attempts = 0;
    while (r.cases < cases && attempts < cases * 50) {
      ++attempts;
      bool drawn = false;
      std::optional<std::string> failure = one(drawn);
      if (!drawn) continue;
      ++r.cases;
      if (failure) {
        ++r.failures;
        if (r.counterexample.empty()) r.counterexample = *failure;
      }
    }
    out.push_back(std::move(r));
  };

  run("well-typed", [&](bool& drawn) -> std::optional<std::string> {
    Morphism f = gen.any();
    drawn = true;
    if (!typed(f)) return f.to_string();
    return std::nullopt;
  });

  run("associativity", [&](bool& drawn) -> std::optional<std::string> {
    CatObject w = gen.object(1), x = gen.object(1), y = gen.object(1), z = gen.object(1);
    auto h = draw(w, x);
    auto g = draw(x, y);
    auto f = draw(y, z);
    if (!h || !g || !f) return std::nullopt;
    drawn = true;
    Morphism lhs = *compose(*compose(*f, *g), *h);
    Morphism rhs = *compose(*f, *compose(*g, *h));
    if (!typed(lhs) || !typed(rhs) || !eq(lhs, rhs)) return lhs.to_string() + "  vs  " + rhs.to_string();
    return std::nullopt;
  });

  run("unit", [&](bool& drawn) -> std::optional<std::string> {
    Morphism f = gen.any();
    drawn = true;
    Morphism left = *compose(identity(f.cod), f);
    Morphism right = *compose(f, identity(f.dom));
    if (!eq(left, f) || !eq(right, f)) return f.to_string();
    return std::nullopt;
  });

  run("product-beta", [&](bool& drawn) -> std::optional<std::string> {
    CatObject x = gen.object(1), y = gen.object(1), z = gen.object(1);
    auto f = draw(x, y);
    auto g = draw(x, z);
    if (!f || !g) return std::nullopt;
    drawn = true;
    Morphism fg = *pairing(*f, *g);
    if (!typed(fg)) return fg.to_string();
    if (!eq(*compose(proj1(y, z), fg), *f) || !eq(*compose(proj2(y, z), fg), *g)) return fg.to_string();
    return std::nullopt;
  });

  run("product-eta", [&](bool& drawn) -> std::optional<std::string> {
    CatObject x = gen.object(1), y = gen.object(1), z = gen.object(1);
    auto h = draw(x, CatObject::product(y, z));
    if (!h) return std::nullopt;
    drawn = true;
    Morphism back = *pairing(*compose(proj1(y, z), *h), *compose(proj2(y, z), *h));
    if (!eq(back, *h)) return h->to_string();
    return std::nullopt;
  });

  run("exponential-beta", [&](bool& drawn) -> std::optional<std::string> {
    CatObject x = gen.object(1), y = gen.object(1), z = gen.object(1);
    auto f = draw(CatObject::product(x, y), z);
    if (!f) return std::nullopt;
    drawn = true;
    Morphism cf = *curry(*f);
    Morphism lhs = *compose(apply_morphism(z, y), product_map(cf, identity(y)));
    if (!typed(cf) || !typed(lhs) || !eq(lhs, *f)) return f->to_string();
    if (!eq(*uncurry(cf), *f)) return f->to_string();
    return std::nullopt;
  });

  run("exponential-eta", [&](bool& drawn) -> std::optional<std::string> {
    CatObject x = gen.object(1), y = gen.object(1), z = gen.object(1);
    auto h = draw(x, CatObject::exponential(z, y));
    if (!h) return std::nullopt;
    drawn = true;
    Morphism back = *curry(*compose(apply_morphism(z, y), product_map(*h, identity(y))));
    if (!eq(back, *h)) return h->to_string();
    return std::nullopt;
  });

  run("terminal", [&](bool& drawn) -> std::optional<std::string> {
    CatObject x = gen.object(1);
    auto f = draw(x, CatObject::terminal());
    auto g = draw(x, CatObject::terminal());
    if (!f || !g) return std::nullopt;
    drawn = true;
    if (!eq(*f, *g) || !eq(*f, to_terminal(x))) return f->to_string() + "  vs  " + g->to_string();
    return std::nullopt;
  });

  return out;
}

// ---------------------------------------------------------------- round trip

RoundTrip round_trip(const Presentation& p) {
  PtsSpec theory = lang_of(p);
  for (const ConstantDecl& c : theory.constants) {
    auto sort = infer(theory, Context{}, c.type);
    if (!sort) return {false, "constant " + c.name + ": " + format_diagnostic(sort.error())};
  }
  auto back = syn_of(theory);
  if (!back) return {false, back.error()};

  // Objects: the translation is the identity on names, so it must be a
  // bijection between the two object lists.
  if (back->objects.size() != p.objects.size()) return {false, "object count differs"};
  std::map<std::string, std::string> obj_map;
  for (std::size_t i = 0; i < p.objects.size(); ++i) {
    auto it = std::find(back->objects.begin(), back->objects.end(), p.objects[i]);
    if (it == back->objects.end()) return {false, "object " + p.objects[i] + " is lost"};
    if (!obj_map.emplace(p.objects[i], *it).second) return {false, "object " + p.objects[i] + " is duplicated"};
  }
  std::set<std::string> images;
  for (const auto& kv : obj_map) images.insert(kv.second);
  if (images.size() != back->objects.size()) return {false, "object map is not injective"};

  if (back->generators.size() != p.generators.size()) return {false, "generator count differs"};
  std::set<std::string> seen;
  for (const Generator& g : p.generators) {
    auto it = std::find_if(back->generators.begin(), back->generators.end(),
                           [&](const Generator& h) { return h.name == g.name; });
    if (it == back->generators.end()) return {false, "generator " + g.name + " is lost"};
    if (!(it->dom == g.dom) || !(it->cod == g.cod)) return {false, "generator " + g.name + " changes endpoints"};
    if (!seen.insert(it->name).second) return {false, "generator " + g.name + " is duplicated"};
    // Each endpoint survives the object translation unchanged.
    for (const CatObject* o : {&g.dom, &g.cod}) {
      auto again = syn_object(object_type(*o));
      if (!again || !(*again == *o)) return {false, "object " + o->to_string() + " does not round-trip"};
    }
    if (!check_morphism(theory, generator_morphism(g))) return {false, "generator " + g.name + " is ill-typed"};
  }

  // And back again: Lang(Syn(Lang p)) has the same constants as Lang p.
  PtsSpec again = lang_of(*back);
  if (again.constants.size() != theory.constants.size()) return {false, "constant count differs"};
  for (std::size_t i = 0; i < theory.constants.size(); ++i) {
    const ConstantDecl& a = theory.constants[i];
    auto it = std::find_if(again.constants.begin(), again.constants.end(),
                           [&](const ConstantDecl& b) { return b.name == a.name; });
    if (it == again.constants.end() || !alpha_equal(it->type, a.type)) return {false, "constant " + a.name + " differs"};
  }
  return {true, "ok"};
}

std::vector<Presentation> small_presentations(std::size_t max_generators) {
  std::vector<Presentation> out;
  out.push_back(Presentation{});
  const CatObject a = CatObject::base("A");
  const CatObject b = CatObject::base("B");
  const CatObject one = CatObject::terminal();
  struct Family {
    std::vector<std::string> objects;
    std::vector<CatObject> endpoints;
  };
  const std::vector<Family> families = {
      {{"A"}, {one, a, CatObject::product(a, a), CatObject::exponential(a, a)}},
      {{"A", "B"}, {one, a, b, CatObject::product(a, b), CatObject::exponential(b, a)}},
  };
  for (const Family& fam : families) {
    std::vector<std::pair<CatObject, CatObject>> sigs;
    for (const CatObject& d : fam.endpoints) {
      for (const CatObject& c : fam.endpoints) sigs.emplace_back(d, c);
    }
    std::function<void(Presentation&)> extend = [&](Presentation& cur) {
      out.push_back(cur);
      if (cur.generators.size() == max_generators) return;
      for (const auto& [d, c] : sigs) {
        cur.generators.push_back({"g" + std::to_string(cur.generators.size()), d, c});
        extend(cur);
        cur.generators.pop_back();
      }
    };
    Presentation base{fam.objects, {}};
    extend(base);
  }
  return out;
}

}  // namespace cube
