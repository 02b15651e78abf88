#include "cube/reduction.hpp"

#include <deque>

namespace cube {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::Beta:
      return "beta";
    case Rule::ProjL:
      return "proj1";
    case Rule::ProjR:
      return "proj2";
    case Rule::IfTrue:
      return "if-true";
    case Rule::IfFalse:
      return "if-false";
  }
  return "?";
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::CallByValue:
      return "cbv";
    case Strategy::CallByName:
      return "cbn";
    case Strategy::NormalOrder:
      return "normal";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  if (text == "cbv" || text == "call-by-value") return Strategy::CallByValue;
  if (text == "cbn" || text == "call-by-name") return Strategy::CallByName;
  if (text == "normal" || text == "normal-order") return Strategy::NormalOrder;
  return std::nullopt;
}

namespace {

// `if A c a b` with c a boolean literal.
std::optional<Rule> if_redex(const Term& t) {
  if (!t.is(Tag::App)) return std::nullopt;
  const Term& f3 = t.fun();
  if (!f3.is(Tag::App)) return std::nullopt;
  const Term& f2 = f3.fun();
  if (!f2.is(Tag::App)) return std::nullopt;
  const Term& f1 = f2.fun();
  if (!f1.is(Tag::App) || !f1.fun().is(Tag::Const) || f1.fun().name() != "if") return std::nullopt;
  const Term& cond = f2.arg();
  if (!cond.is(Tag::Const)) return std::nullopt;
  if (cond.name() == "true") return Rule::IfTrue;
  if (cond.name() == "false") return Rule::IfFalse;
  return std::nullopt;
}

}  // namespace

std::optional<Rule> redex_rule(const Term& t) {
  if (!t) return std::nullopt;
  if (t.is(Tag::App) && t.fun().is(Tag::Lam)) return Rule::Beta;
  if (t.is(Tag::Proj) && t.pair_term().is(Tag::Pair)) return t.which() == 1 ? Rule::ProjL : Rule::ProjR;
  return if_redex(t);
}

std::optional<Step> contract(const Term& t) {
  auto rule = redex_rule(t);
  if (!rule) return std::nullopt;
  switch (*rule) {
    case Rule::Beta:
      return Step{instantiate(t.fun().body(), t.arg()), {}, *rule};
    case Rule::ProjL:
      return Step{t.pair_term().first(), {}, *rule};
    case Rule::ProjR:
      return Step{t.pair_term().second(), {}, *rule};
    case Rule::IfTrue:
      return Step{t.fun().arg(), {}, *rule};
    case Rule::IfFalse:
      return Step{t.arg(), {}, *rule};
  }
  return std::nullopt;
}

std::optional<Term> reduce_at(const Term& t, const Path& path) {
  Term sub = subterm_at(t, path);
  auto c = contract(sub);
  if (!c) return std::nullopt;
  return replace_at(t, path, c->term);
}

namespace {

void collect_redexes(const Term& t, Path& path, std::vector<Path>& out) {
  if (!t) return;
  if (redex_rule(t)) out.push_back(path);
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    path.push_back(static_cast<std::uint8_t>(i));
    collect_redexes(t.child(i), path, out);
    path.pop_back();
  }
}

// Each search routine returns the rewritten term and fills `path`/`rule`
// with the contracted position when a step exists.
struct Search {
  Path path;
  Rule rule = Rule::Beta;

  bool at_root(const Term& t, Term& out) {
    auto c = contract(t);
    if (!c) return false;
    out = std::move(c->term);
    rule = c->rule;
    return true;
  }

  template <class F>
  bool into(const Term& t, std::size_t i, Term& out, F&& f) {
    const Term& c = t.child(i);
    if (!c) return false;
    path.push_back(static_cast<std::uint8_t>(i));
    Term nc;
    if ((this->*f)(c, nc)) {
      out = t.with_child(i, std::move(nc));
      return true;
    }
    path.pop_back();
    return false;
  }

  bool normal_order(const Term& t, Term& out) {
    if (at_root(t, out)) return true;
    for (std::size_t i = 0; i < t.child_count(); ++i) {
      if (into(t, i, out, &Search::normal_order)) return true;
    }
    return false;
  }

  bool cbn_weak(const Term& t, Term& out) {
    if (at_root(t, out)) return true;
    if (t.is(Tag::App) || t.is(Tag::Proj)) return into(t, 0, out, &Search::cbn_weak);
    return false;
  }

  bool cbn_strong(const Term& t, Term& out) {
    if (cbn_weak(t, out)) return true;
    for (std::size_t i = 0; i < t.child_count(); ++i) {
      if (into(t, i, out, &Search::cbn_strong)) return true;
    }
    return false;
  }

  bool cbv_weak(const Term& t, Term& out) {
    switch (t.tag()) {
      case Tag::App:
        if (into(t, 1, out, &Search::cbv_weak)) return true;
        if (into(t, 0, out, &Search::cbv_weak)) return true;
        return at_root(t, out);
      case Tag::Proj:
        if (into(t, 0, out, &Search::cbv_weak)) return true;
        return at_root(t, out);
      case Tag::Pair:
        if (into(t, 1, out, &Search::cbv_weak)) return true;
        return into(t, 0, out, &Search::cbv_weak);
      default:
        return false;
    }
  }

  bool cbv_strong(const Term& t, Term& out) {
    if (cbv_weak(t, out)) return true;
    for (std::size_t i = t.child_count(); i-- > 0;) {
      if (into(t, i, out, &Search::cbv_strong)) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<Path> redex_positions(const Term& t) {
  std::vector<Path> out;
  Path path;
  collect_redexes(t, path, out);
  return out;
}

std::optional<Step> step(const Term& t, Strategy s) {
  if (!t) return std::nullopt;
  Search search;
  Term out;
  bool found = false;
  switch (s) {
    case Strategy::NormalOrder:
      found = search.normal_order(t, out);
      break;
    case Strategy::CallByName:
      found = search.cbn_strong(t, out);
      break;
    case Strategy::CallByValue:
      found = search.cbv_strong(t, out);
      break;
  }
  if (!found) return std::nullopt;
  return Step{std::move(out), std::move(search.path), search.rule};
}

ReductionTrace normalize(const Term& t, Strategy s, std::size_t fuel, const NormalizeOptions& options) {
  ReductionTrace trace;
  trace.start = t;
  std::deque<Term> window;
  if (options.loop_window > 0) window.push_back(t);

  Term current = t;
  for (std::size_t n = 0; n < fuel; ++n) {
    auto next = step(current, s);
    if (!next) {
      trace.outcome = {Outcome::Kind::NormalForm, current, 0};
      return trace;
    }
    current = next->term;
    ++trace.step_count;
    if (options.record_steps) trace.steps.push_back(std::move(*next));

    if (options.loop_window > 0) {
      // window.back() is the previous term: distance 1
      for (std::size_t d = 1; d <= window.size(); ++d) {
        if (alpha_equal(window[window.size() - d], current)) {
          trace.outcome = {Outcome::Kind::LoopDetected, current, d};
          return trace;
        }
      }
      window.push_back(current);
      if (window.size() > options.loop_window) window.pop_front();
    }
  }
  if (!step(current, s)) {
    trace.outcome = {Outcome::Kind::NormalForm, current, 0};
  } else {
    trace.outcome = {Outcome::Kind::FuelExhausted, current, 0};
  }
  return trace;
}

Expected<Term, FuelExhausted> fixed_point_unfold(const Term& fixpoint, const Term& f, std::size_t unfoldings,
                                                 std::size_t budget) {
  Term current = Term::app(fixpoint, f);
  if (unfoldings == 0) return current;
  for (std::size_t n = 0; n <= budget; ++n) {
    std::size_t leading = 0;
    for (Term t = current; t.is(Tag::App) && alpha_equal(t.fun(), f); t = t.arg()) ++leading;
    if (leading == unfoldings) return current;
    if (n == budget) break;
    auto next = step(current, Strategy::NormalOrder);
    if (!next) break;
    current = std::move(next->term);
  }
  return unexpected(FuelExhausted{budget, current});
}

}  // namespace cube
