#include <cctype>

#include "cube/surface.hpp"

namespace cube {

namespace {

// Binding strength of a printed form; a subterm is parenthesized when its
// own level is below the level its position demands.
enum Level : int { kTop = 0, kArrow = 1, kProduct = 2, kApp = 3, kAtom = 4 };

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(c0) || c0 == '_' || c0 >= 0x80)) return false;
  if (s == "_") return false;
  for (unsigned char c : s) {
    if (!(std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80)) return false;
  }
  // Non-ASCII letters are fine, but the binder symbols are not.
  for (std::string_view sym : {"\xce\xbb", "\xce\x9b", "\xce\xa0", "\xce\xa3", "\xe2\x88\x80", "\xe2\x86\x92",
                               "\xe2\x8b\x86", "\xe2\x96\xa1", "\xc3\x97"}) {
    if (s.find(sym) != std::string::npos) return false;
  }
  return !reserved_words().count(s);
}

void collect_constants(const Term& t, std::set<std::string>& out) {
  if (!t) return;
  if (t.is(Tag::Const)) out.insert(t.name());
  for (std::size_t i = 0; i < t.child_count(); ++i) collect_constants(t.child(i), out);
}

std::string sort_text(const SortId& s) {
  if (s.is_star()) return "Star";
  if (s.is_box()) return s.level() == 1 ? "Box" : "Box " + std::to_string(s.level());
  if (s.is_universe()) return "Type " + std::to_string(s.level());
  return s.to_string();
}

class Printer {
 public:
  Printer(const Term& root, const std::vector<std::string>& names) : ctx_(names) {
    collect_constants(root, avoid_);
    for (std::uint32_t i : free_variables(root)) {
      if (i >= ctx_.size()) {
        std::string n = "_" + std::to_string(i - ctx_.size());
        avoid_.insert(n);
        free_names_[i - static_cast<std::uint32_t>(ctx_.size())] = n;
      }
    }
  }

  std::string print(const Term& t, int level, bool tail_open) {
    switch (t.tag()) {
      case Tag::Var:
        return var_name(t.index());
      case Tag::Sort:
        return sort_text(t.sort_id());
      case Tag::Const:
        return t.name();
      case Tag::App: {
        std::string s = print(t.fun(), kApp, true) + " " + print(t.arg(), kAtom, tail_open);
        return wrap(s, kApp, level);
      }
      case Tag::Proj:
        return wrap(print(t.pair_term(), kAtom, true) + (t.which() == 1 ? ".1" : ".2"), kAtom, level);
      case Tag::Pair: {
        std::string s = "(" + print(t.first(), kTop, false) + ", ";
        if (t.annotation()) {
          s += print(t.second(), kTop, true) + " as " + print(t.annotation(), kTop, false);
        } else {
          s += print(t.second(), kTop, false);
        }
        return s + ")";
      }
      case Tag::Pi:
      case Tag::Sigma: {
        bool pi = t.is(Tag::Pi);
        if (!occurs_free(t.codomain(), 0)) {
          // Non-dependent: A -> B or A & B.
          std::string lhs = print(t.domain(), pi ? kProduct : kApp, true);
          ctx_.emplace_back();
          std::string rhs = pi ? print(t.codomain(), kTop, level > kArrow ? false : tail_open)
                               : print(t.codomain(), kProduct, level > kProduct ? false : tail_open);
          ctx_.pop_back();
          return wrap(lhs + (pi ? " -> " : " & ") + rhs, pi ? kArrow : kProduct, level);
        }
        std::string ann = print(t.domain(), kArrow, true);
        std::string name = fresh(t.name());
        ctx_.push_back(name);
        std::string body = print(t.codomain(), kTop, false);
        ctx_.pop_back();
        return binder((pi ? "Pi " : "Sig ") + name + ":" + ann + ". " + body, level, tail_open);
      }
      case Tag::Lam: {
        if (!t.annotation()) {
          // Contract a run of unannotated binders: \x y. e
          std::string head = "\\";
          std::size_t pushed = 0;
          Term cur = t;
          while (cur.is(Tag::Lam) && !cur.annotation()) {
            std::string name = fresh(cur.name());
            head += (pushed ? " " : "") + name;
            ctx_.push_back(name);
            ++pushed;
            cur = cur.body();
          }
          std::string body = print(cur, kTop, false);
          for (std::size_t i = 0; i < pushed; ++i) ctx_.pop_back();
          return binder(head + ". " + body, level, tail_open);
        }
        const Term& ann = t.annotation();
        bool type_lambda = ann.is(Tag::Sort) && ann.sort_id().is_star();
        std::string ann_text = type_lambda ? "" : print(ann, kArrow, true);
        std::string name = fresh(t.name());
        ctx_.push_back(name);
        std::string body = print(t.body(), kTop, false);
        ctx_.pop_back();
        if (type_lambda) return binder("/\\" + name + ". " + body, level, tail_open);
        return binder("\\" + name + ":" + ann_text + ". " + body, level, tail_open);
      }
    }
    return "?";
  }

 private:
  static std::string wrap(const std::string& s, int own, int level) { return own < level ? "(" + s + ")" : s; }

  static std::string binder(const std::string& s, int level, bool tail_open) {
    return level > kTop || tail_open ? "(" + s + ")" : s;
  }

  std::string var_name(std::uint32_t index) const {
    if (index < ctx_.size()) return ctx_[ctx_.size() - 1 - index];
    auto it = free_names_.find(index - static_cast<std::uint32_t>(ctx_.size()));
    return it != free_names_.end() ? it->second : "_" + std::to_string(index - ctx_.size());
  }

  bool taken(const std::string& n) const {
    if (avoid_.count(n)) return true;
    for (const std::string& c : ctx_) {
      if (c == n) return true;
    }
    return false;
  }

  std::string fresh(const std::string& hint) const {
    std::string base = valid_identifier(hint) ? hint : "x";
    if (!taken(base)) return base;
    std::string stem = base;
    while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
    for (std::size_t k = 1;; ++k) {
      std::string cand = stem + std::to_string(k);
      if (!taken(cand)) return cand;
    }
  }

  std::vector<std::string> ctx_;  // innermost last; empty entries are unnamed binders
  std::set<std::string> avoid_;
  std::map<std::uint32_t, std::string> free_names_;
};

}  // namespace

std::string print_term(const Term& t, const std::vector<std::string>& names) {
  if (!t) return "<null>";
  Printer p(t, names);
  return p.print(t, kTop, false);
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out = "error[" + d.rule + "]: " + d.message;
  if (d.expected && d.found) {
    out += ": expected " + print_term(d.expected, d.scope) + ", found " + print_term(d.found, d.scope);
  } else if (d.found) {
    out += ": " + print_term(d.found, d.scope);
  }
  out += " at " + format_path(d.location);
  return out;
}

std::string render_trace(const ReductionTrace& trace, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Step& s = trace.steps[i];
    out += std::to_string(i + 1) + " " + std::string(rule_name(s.rule)) + " @" + format_path(s.path) + "  " +
           print_term(s.term, names) + "\n";
  }
  return out;
}

}  // namespace cube
