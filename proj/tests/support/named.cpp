#include "named.hpp"

#include <algorithm>
#include <stdexcept>

namespace cube::testing {

NamedPtr Named::var(std::string n) {
  return std::make_shared<const Named>(Named{Kind::Var, std::move(n), nullptr, nullptr});
}
NamedPtr Named::lam(std::string n, NamedPtr body) {
  return std::make_shared<const Named>(Named{Kind::Lam, std::move(n), std::move(body), nullptr});
}
NamedPtr Named::app(NamedPtr f, NamedPtr a) {
  return std::make_shared<const Named>(Named{Kind::App, {}, std::move(f), std::move(a)});
}

std::set<std::string> named_free(const NamedPtr& t) {
  switch (t->kind) {
    case Named::Kind::Var:
      return {t->name};
    case Named::Kind::Lam: {
      auto s = named_free(t->left);
      s.erase(t->name);
      return s;
    }
    case Named::Kind::App: {
      auto s = named_free(t->left);
      auto r = named_free(t->right);
      s.insert(r.begin(), r.end());
      return s;
    }
  }
  return {};
}

NamedPtr named_subst(const NamedPtr& t, const std::string& x, const NamedPtr& s) {
  switch (t->kind) {
    case Named::Kind::Var:
      return t->name == x ? s : t;
    case Named::Kind::App:
      return Named::app(named_subst(t->left, x, s), named_subst(t->right, x, s));
    case Named::Kind::Lam: {
      if (t->name == x) return t;
      auto fs = named_free(s);
      if (!fs.count(t->name)) return Named::lam(t->name, named_subst(t->left, x, s));
      auto avoid = named_free(t->left);
      avoid.insert(fs.begin(), fs.end());
      avoid.insert(x);
      std::string fresh = t->name;
      while (avoid.count(fresh)) fresh += "'";
      NamedPtr renamed = named_subst(t->left, t->name, Named::var(fresh));
      return Named::lam(fresh, named_subst(renamed, x, s));
    }
  }
  return t;
}

namespace {

NamedPtr to_named_rec(const Term& t, std::vector<std::string>& scope) {
  switch (t.tag()) {
    case Tag::Var:
      if (t.index() >= scope.size()) throw std::out_of_range("to_named: unbound index");
      return Named::var(scope[scope.size() - 1 - t.index()]);
    case Tag::App:
      return Named::app(to_named_rec(t.fun(), scope), to_named_rec(t.arg(), scope));
    case Tag::Lam: {
      std::set<std::string> outer;
      for (std::uint32_t i : free_variables(t.body())) {
        if (i > 0) outer.insert(scope[scope.size() - i]);
      }
      std::string name = t.name().empty() ? "x" : t.name();
      while (outer.count(name)) name += "'";
      scope.push_back(name);
      NamedPtr body = to_named_rec(t.body(), scope);
      scope.pop_back();
      return Named::lam(name, body);
    }
    default:
      throw std::invalid_argument("to_named: only untyped lambda terms");
  }
}

Term from_named_rec(const NamedPtr& t, std::vector<std::string>& scope) {
  switch (t->kind) {
    case Named::Kind::Var: {
      auto it = std::find(scope.rbegin(), scope.rend(), t->name);
      if (it == scope.rend()) throw std::out_of_range("from_named: free name " + t->name);
      return Term::var(static_cast<std::uint32_t>(it - scope.rbegin()), t->name);
    }
    case Named::Kind::App:
      return Term::app(from_named_rec(t->left, scope), from_named_rec(t->right, scope));
    case Named::Kind::Lam: {
      scope.push_back(t->name);
      Term body = from_named_rec(t->left, scope);
      scope.pop_back();
      return Term::lam(t->name, body);
    }
  }
  return Term();
}

}  // namespace

NamedPtr to_named(const Term& t, const std::vector<std::string>& scope) {
  std::vector<std::string> s = scope;
  return to_named_rec(t, s);
}

Term from_named(const NamedPtr& t, const std::vector<std::string>& scope) {
  std::vector<std::string> s = scope;
  return from_named_rec(t, s);
}

std::string named_string(const NamedPtr& t) {
  switch (t->kind) {
    case Named::Kind::Var:
      return t->name;
    case Named::Kind::Lam:
      return "(\\" + t->name + ". " + named_string(t->left) + ")";
    case Named::Kind::App:
      return "(" + named_string(t->left) + " " + named_string(t->right) + ")";
  }
  return {};
}

}  // namespace cube::testing
