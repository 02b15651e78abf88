#include <algorithm>
#include "cube/kernel.hpp"

namespace cube {

Context Context::extended(std::string name, Term type) const {
  Context out = *this;
  out.push(std::move(name), std::move(type));
  return out;
}

std::optional<Term> Context::lookup(std::uint32_t index) const {
  if (index >= decls_.size()) return std::nullopt;
  return shift(decls_[decls_.size() - 1 - index].type, 0, static_cast<std::int64_t>(index) + 1);
}

std::vector<std::string> Context::names() const {
  std::vector<std::string> out;
  out.reserve(decls_.size());
  for (const Decl& d : decls_) out.push_back(d.name);
  return out;
}

std::optional<std::uint32_t> Context::find(const std::string& name) const {
  for (std::size_t i = decls_.size(); i-- > 0;) {
    if (decls_[i].name == name) return static_cast<std::uint32_t>(decls_.size() - 1 - i);
  }
  return std::nullopt;
}

std::string_view diagnostic_kind_name(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::UnboundVariable:
      return "UnboundVariable";
    case DiagnosticKind::RuleNotAllowed:
      return "RuleNotAllowed";
    case DiagnosticKind::TypeMismatch:
      return "TypeMismatch";
    case DiagnosticKind::NotAFunction:
      return "NotAFunction";
    case DiagnosticKind::NotAPair:
      return "NotAPair";
    case DiagnosticKind::AxiomMissing:
      return "AxiomMissing";
    case DiagnosticKind::UniverseError:
      return "UniverseError";
    case DiagnosticKind::MissingAnnotation:
      return "MissingAnnotation";
    case DiagnosticKind::FuelExhausted:
      return "FuelExhausted";
  }
  return "?";
}

Expected<Term, Diagnostic> beta_normal_form(const Term& t, std::size_t fuel) {
  NormalizeOptions options;
  options.loop_window = 0;
  options.record_steps = false;
  ReductionTrace trace = normalize(t, Strategy::NormalOrder, fuel, options);
  if (!trace.normalized()) {
    Diagnostic d{DiagnosticKind::FuelExhausted, {}, "CONV",
                 "normalization did not finish within " + std::to_string(fuel) + " steps", {}, trace.outcome.term,
                 std::nullopt, {}, std::nullopt};
    return unexpected(std::move(d));
  }
  return trace.outcome.term;
}

Expected<bool, Diagnostic> conv(const Term& a, const Term& b, std::size_t fuel) {
  if (alpha_equal(a, b)) return true;
  auto na = beta_normal_form(a, fuel);
  if (!na) return unexpected(na.error());
  auto nb = beta_normal_form(b, fuel);
  if (!nb) return unexpected(nb.error());
  return alpha_equal(*na, *nb);
}

namespace {

// Universe subsumption on β-normal forms: sorts by level, Π covariant in
// the codomain, Σ covariant in both components.
bool cumulative_below(const Term& a, const Term& b) {
  if (alpha_equal(a, b)) return true;
  if (a.is(Tag::Sort) && b.is(Tag::Sort)) {
    const SortId& x = a.sort_id();
    const SortId& y = b.sort_id();
    if (x.kind() == y.kind() && (x.is_universe() || x.is_box())) return x.level() <= y.level();
    return false;
  }
  if (a.is(Tag::Pi) && b.is(Tag::Pi)) {
    return alpha_equal(a.domain(), b.domain()) && cumulative_below(a.codomain(), b.codomain());
  }
  if (a.is(Tag::Sigma) && b.is(Tag::Sigma)) {
    return cumulative_below(a.first(), b.first()) && cumulative_below(a.second(), b.second());
  }
  return false;
}

}  // namespace

Expected<bool, Diagnostic> subsumes(const PtsSpec& spec, const Term& found, const Term& expected, std::size_t fuel) {
  if (alpha_equal(found, expected)) return true;
  auto na = beta_normal_form(found, fuel);
  if (!na) return unexpected(na.error());
  auto nb = beta_normal_form(expected, fuel);
  if (!nb) return unexpected(nb.error());
  if (alpha_equal(*na, *nb)) return true;
  return spec.ext.cumulative && cumulative_below(*na, *nb);
}

namespace {

using Result = Expected<Term, Diagnostic>;

class Checker {
 public:
  Checker(const PtsSpec& spec, const Context& ctx, std::size_t fuel)
      : spec_(spec), ctx_(ctx), fuel_(fuel) {}

  Result infer(const Term& t) {
    switch (t.tag()) {
      case Tag::Var:
        return infer_var(t);
      case Tag::Sort:
        return infer_sort_term(t);
      case Tag::Const:
        return infer_const(t);
      case Tag::Pi:
        return infer_binder_type(t, false);
      case Tag::Sigma:
        return infer_binder_type(t, true);
      case Tag::Lam:
        return infer_lam(t);
      case Tag::App:
        return infer_app(t);
      case Tag::Pair:
        return infer_pair(t);
      case Tag::Proj:
        return infer_proj(t);
    }
    return fail(DiagnosticKind::UniverseError, "?", "unknown term");
  }

  // Sort classifying the type `a`.
  Expected<SortId, Diagnostic> sort_of(const Term& a) {
    auto ty = infer(a);
    if (!ty) return unexpected(std::move(ty).error());
    auto n = normal(*ty);
    if (!n) return unexpected(std::move(n).error());
    if (!n->is(Tag::Sort) || !spec_.has_sort(n->sort_id())) {
      Diagnostic d = make(DiagnosticKind::UniverseError, "SORT", "expected a type, but its classifier is not a sort");
      d.found = *n;
      return unexpected(std::move(d));
    }
    return n->sort_id();
  }

  Expected<Ok, Diagnostic> check_against(const Term& t, const Term& expected, const char* rule) {
    auto ty = infer(t);
    if (!ty) return unexpected(std::move(ty).error());
    auto ok = subsumes(spec_, *ty, expected, fuel_);
    if (!ok) return unexpected(relocate(std::move(ok).error()));
    if (!*ok) {
      Diagnostic d = make(DiagnosticKind::TypeMismatch, rule, "type mismatch");
      d.expected = expected;
      d.found = *ty;
      return unexpected(std::move(d));
    }
    return Ok{};
  }

  Path& path() { return path_; }

 private:
  Diagnostic make(DiagnosticKind kind, std::string rule, std::string message) const {
    Diagnostic d{kind, path_, std::move(rule), std::move(message), {}, {}, std::nullopt, ctx_.names(), std::nullopt};
    return d;
  }

  Unexpected<Diagnostic> fail(DiagnosticKind kind, std::string rule, std::string message) const {
    return unexpected(make(kind, std::move(rule), std::move(message)));
  }

  Diagnostic relocate(Diagnostic d) const {
    d.location = path_;
    d.scope = ctx_.names();
    return d;
  }

  Result normal(const Term& t) {
    auto n = beta_normal_form(t, fuel_);
    if (!n) return unexpected(relocate(std::move(n).error()));
    return n;
  }

  // Runs `f` with `i` pushed on the current path.
  template <class F>
  auto at(std::uint8_t i, F&& f) {
    path_.push_back(i);
    auto r = f();
    path_.pop_back();
    return r;
  }

  Result infer_var(const Term& t) {
    if (auto ty = ctx_.lookup(t.index())) return *ty;
    std::string name = t.name().empty() ? "#" + std::to_string(t.index()) : t.name();
    return fail(DiagnosticKind::UnboundVariable, "VAR", "unbound variable " + name);
  }

  Result infer_sort_term(const Term& t) {
    const SortId& s = t.sort_id();
    if (!spec_.has_sort(s)) {
      return fail(DiagnosticKind::UniverseError, "SORT", s.to_string() + " is not a sort of " + spec_.name);
    }
    if (auto ax = spec_.axiom_for(s)) return Term::sort(*ax);
    return fail(DiagnosticKind::AxiomMissing, "AXIOM", "no axiom classifies " + s.to_string() + " in " + spec_.name);
  }

  Result infer_const(const Term& t) {
    auto ty = spec_.constant_type(t.name());
    if (!ty) return fail(DiagnosticKind::UnboundVariable, "CONST", "unknown constant " + t.name());
    // Builtin eliminators are schemas over the base sort and usable in every
    // spec that enables them; other declared types must be formable here.
    bool registered = std::any_of(spec_.constants.begin(), spec_.constants.end(),
                                  [&](const ConstantDecl& c) { return c.name == t.name(); });
    if (!registered && (t.name() == "absurd" || t.name() == "if")) return *ty;
    Checker sub(spec_, Context(), fuel_);
    auto s = sub.sort_of(*ty);
    if (!s) {
      Diagnostic d = relocate(std::move(s).error());
      d.rule = "CONST";
      d.message = "constant " + t.name() + " is not available in " + spec_.name + ": " + d.message;
      return unexpected(std::move(d));
    }
    return *ty;
  }

  Result infer_binder_type(const Term& t, bool is_sigma) {
    const char* rule = is_sigma ? "SIGMA" : "PI";
    if (is_sigma) {
      if (!spec_.ext.pairs && !spec_.ext.sigma) {
        return fail(DiagnosticKind::RuleNotAllowed, rule, "pair types are not enabled in " + spec_.name);
      }
      if (!spec_.ext.sigma && occurs_free(t.second(), 0)) {
        return fail(DiagnosticKind::RuleNotAllowed, rule, "dependent pair types are not enabled in " + spec_.name);
      }
    }
    auto s1 = at(0, [&] { return sort_of(t.domain()); });
    if (!s1) return unexpected(std::move(s1).error());
    ctx_.push(t.name(), t.domain());
    auto s2 = at(1, [&] { return sort_of(t.codomain()); });
    ctx_.pop();
    if (!s2) return unexpected(std::move(s2).error());
    auto r = is_sigma ? spec_.sigma_rule_for(*s1, *s2) : spec_.rule_for(*s1, *s2);
    if (!r) {
      Diagnostic d = make(DiagnosticKind::RuleNotAllowed, rule,
                          "rule (" + s1->to_string() + ", " + s2->to_string() + ") is not allowed in " + spec_.name);
      d.rule_pair = std::make_pair(*s1, *s2);
      return unexpected(std::move(d));
    }
    return Term::sort(*r);
  }

  Result infer_lam(const Term& t) {
    if (!t.annotation()) {
      return fail(DiagnosticKind::MissingAnnotation, "ABS", "binder " + t.name() + " has no type annotation");
    }
    auto s1 = at(0, [&] { return sort_of(t.annotation()); });
    if (!s1) return unexpected(std::move(s1).error());
    ctx_.push(t.name(), t.annotation());
    auto body_type = at(1, [&] { return infer(t.body()); });
    if (!body_type) {
      ctx_.pop();
      return body_type;
    }
    // Side condition: the Π-type itself must be formable.
    auto s2 = sort_of(*body_type);
    ctx_.pop();
    if (!s2) {
      Diagnostic d = std::move(s2).error();
      d.rule = "ABS";
      d.location = path_;
      d.scope = ctx_.names();
      return unexpected(std::move(d));
    }
    if (!spec_.rule_for(*s1, *s2)) {
      Diagnostic d = make(DiagnosticKind::RuleNotAllowed, "ABS",
                          "rule (" + s1->to_string() + ", " + s2->to_string() + ") is not allowed in " + spec_.name);
      d.rule_pair = std::make_pair(*s1, *s2);
      return unexpected(std::move(d));
    }
    return Term::pi(t.name(), t.annotation(), *body_type);
  }

  Result infer_app(const Term& t) {
    auto fty = at(0, [&] { return infer(t.fun()); });
    if (!fty) return fty;
    auto nf = normal(*fty);
    if (!nf) return nf;
    if (!nf->is(Tag::Pi)) {
      Diagnostic d = make(DiagnosticKind::NotAFunction, "APP", "applied term is not a function");
      d.found = *fty;
      return unexpected(std::move(d));
    }
    auto ok = at(1, [&] { return check_against(t.arg(), nf->domain(), "APP"); });
    if (!ok) return unexpected(std::move(ok).error());
    return instantiate(nf->codomain(), t.arg());
  }

  Result infer_pair(const Term& t) {
    if (!spec_.ext.pairs && !spec_.ext.sigma) {
      return fail(DiagnosticKind::RuleNotAllowed, "PAIR", "pairs are not enabled in " + spec_.name);
    }
    if (t.annotation()) {
      auto s = at(2, [&] { return sort_of(t.annotation()); });
      if (!s) return unexpected(std::move(s).error());
      auto n = normal(t.annotation());
      if (!n) return n;
      if (!n->is(Tag::Sigma)) {
        Diagnostic d = make(DiagnosticKind::NotAPair, "PAIR", "pair annotation is not a pair type");
        d.found = t.annotation();
        return unexpected(std::move(d));
      }
      auto a = at(0, [&] { return check_against(t.first(), n->first(), "PAIR"); });
      if (!a) return unexpected(std::move(a).error());
      Term second_type = instantiate(n->second(), t.first());
      auto b = at(1, [&] { return check_against(t.second(), second_type, "PAIR"); });
      if (!b) return unexpected(std::move(b).error());
      return t.annotation();
    }
    auto a = at(0, [&] { return infer(t.first()); });
    if (!a) return a;
    auto b = at(1, [&] { return infer(t.second()); });
    if (!b) return b;
    Term product = Term::product(*a, *b);
    auto s = infer_binder_type(product, true);
    if (!s) {
      Diagnostic d = std::move(s).error();
      d.rule = "PAIR";
      d.location = path_;
      return unexpected(std::move(d));
    }
    return product;
  }

  Result infer_proj(const Term& t) {
    auto pty = at(0, [&] { return infer(t.pair_term()); });
    if (!pty) return pty;
    auto n = normal(*pty);
    if (!n) return n;
    if (!n->is(Tag::Sigma)) {
      Diagnostic d = make(DiagnosticKind::NotAPair, t.which() == 1 ? "PROJ1" : "PROJ2", "projection from a non-pair");
      d.found = *pty;
      return unexpected(std::move(d));
    }
    if (t.which() == 1) return n->first();
    return instantiate(n->second(), Term::proj(1, t.pair_term()));
  }

  const PtsSpec& spec_;
  Context ctx_;
  std::size_t fuel_;
  Path path_;
};

}  // namespace

Expected<Term, Diagnostic> infer(const PtsSpec& spec, const Context& ctx, const Term& t, const KernelOptions& options) {
  Checker checker(spec, ctx, options.fuel);
  return checker.infer(t);
}

Expected<Ok, Diagnostic> check(const PtsSpec& spec, const Context& ctx, const Term& t, const Term& against,
                               const KernelOptions& options) {
  Checker checker(spec, ctx, options.fuel);
  return checker.check_against(t, against, "CHECK");
}

Expected<Ok, Diagnostic> wf_context(const PtsSpec& spec, const Context& ctx, const KernelOptions& options) {
  std::vector<Decl> prefix;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    Checker checker(spec, Context(prefix), options.fuel);
    auto s = checker.sort_of(ctx[i].type);
    if (!s) {
      Diagnostic d = std::move(s).error();
      d.declaration = i;
      d.message = "in declaration of " + ctx[i].name + ": " + d.message;
      return unexpected(std::move(d));
    }
    prefix.push_back(ctx[i]);
  }
  return Ok{};
}

}  // namespace cube
