#include "cube/term.hpp"

#include <functional>
#include <stdexcept>

namespace cube {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over the running combination
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_sort(const SortId& s) {
  std::uint64_t h = mix(static_cast<std::uint64_t>(s.kind()), s.level());
  if (s.kind() == SortId::Kind::Named) h = mix(h, std::hash<std::string>{}(s.name()));
  return h;
}

}  // namespace

SortId SortId::box(std::uint32_t level) {
  if (level == 0) throw std::invalid_argument("Box sorts start at level 1");
  return SortId(Kind::Box, level, {});
}

std::string SortId::to_string() const {
  switch (kind_) {
    case Kind::Star:
      return "Star";
    case Kind::Box:
      return level_ == 1 ? "Box" : "Box " + std::to_string(level_);
    case Kind::Universe:
      return "Type " + std::to_string(level_);
    case Kind::Named:
      return name_;
  }
  return "?";
}

std::string format_path(const Path& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

bool binds_child(Tag tag, std::size_t i) {
  return i == 1 && (tag == Tag::Lam || tag == Tag::Pi || tag == Tag::Sigma);
}

Term Term::make(Tag tag, std::uint32_t index, SortId sort, std::string name,
                std::initializer_list<Term> children) {
  auto node = std::make_shared<Node>();
  node->tag = tag;
  node->index = index;
  node->sort = std::move(sort);
  node->name = std::move(name);
  node->arity = static_cast<std::uint8_t>(children.size());

  std::uint64_t h = mix(0x51ed27, static_cast<std::uint64_t>(tag));
  switch (tag) {
    case Tag::Var:
      h = mix(h, index);
      node->free_bound = index + 1;
      break;
    case Tag::Sort:
      h = mix(h, hash_sort(node->sort));
      break;
    case Tag::Const:
      h = mix(h, std::hash<std::string>{}(node->name));
      break;
    case Tag::Proj:
      h = mix(h, index);
      break;
    default:
      break;
  }
  std::size_t i = 0;
  for (const Term& c : children) {
    node->children[i] = c;
    h = mix(h, c ? c.hash() : 0x7f4a7c15ULL);
    node->size += c.size();
    std::uint32_t fb = c.free_bound();
    if (binds_child(tag, i)) fb = fb > 0 ? fb - 1 : 0;
    if (fb > node->free_bound) node->free_bound = fb;
    ++i;
  }
  node->hash = h;
  Term t;
  t.node_ = std::move(node);
  return t;
}

Term Term::var(std::uint32_t index, std::string hint) {
  return make(Tag::Var, index, SortId::star(), std::move(hint), {});
}

Term Term::sort(SortId s) { return make(Tag::Sort, 0, std::move(s), {}, {}); }

Term Term::lam(std::string binder, Term annotation, Term body) {
  return make(Tag::Lam, 0, SortId::star(), std::move(binder), {std::move(annotation), std::move(body)});
}

Term Term::pi(std::string binder, Term domain, Term codomain) {
  return make(Tag::Pi, 0, SortId::star(), std::move(binder), {std::move(domain), std::move(codomain)});
}

Term Term::arrow(Term domain, Term codomain) {
  return pi("_", std::move(domain), shift(codomain, 0, 1));
}

Term Term::sigma(std::string binder, Term first, Term second) {
  return make(Tag::Sigma, 0, SortId::star(), std::move(binder), {std::move(first), std::move(second)});
}

Term Term::product(Term first, Term second) {
  return sigma("_", std::move(first), shift(second, 0, 1));
}

Term Term::app(Term fun, Term arg) {
  return make(Tag::App, 0, SortId::star(), {}, {std::move(fun), std::move(arg)});
}

Term Term::apps(Term fun, std::initializer_list<Term> args) {
  for (const Term& a : args) fun = app(std::move(fun), a);
  return fun;
}

Term Term::pair(Term first, Term second, Term annotation) {
  return make(Tag::Pair, 0, SortId::star(), {},
              {std::move(first), std::move(second), std::move(annotation)});
}

Term Term::proj(int which, Term pair) {
  if (which != 1 && which != 2) throw std::invalid_argument("projection index must be 1 or 2");
  return make(Tag::Proj, static_cast<std::uint32_t>(which), SortId::star(), {}, {std::move(pair)});
}

Term Term::constant(std::string name) { return make(Tag::Const, 0, SortId::star(), std::move(name), {}); }

Term Term::with_child(std::size_t i, Term replacement) const {
  const Node& n = *node_;
  std::array<Term, 3> c = n.children;
  c[i] = std::move(replacement);
  switch (n.arity) {
    case 1:
      return make(n.tag, n.index, n.sort, n.name, {c[0]});
    case 2:
      return make(n.tag, n.index, n.sort, n.name, {c[0], c[1]});
    case 3:
      return make(n.tag, n.index, n.sort, n.name, {c[0], c[1], c[2]});
    default:
      throw std::logic_error("with_child on a leaf");
  }
}

bool alpha_equal(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  if (!a || !b) return false;
  if (a.hash() != b.hash() || a.size() != b.size() || a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Tag::Var:
      return a.index() == b.index();
    case Tag::Sort:
      return a.sort_id() == b.sort_id();
    case Tag::Const:
      return a.name() == b.name();
    case Tag::Proj:
      if (a.which() != b.which()) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.child_count(); ++i) {
    if (!alpha_equal(a.child(i), b.child(i))) return false;
  }
  return true;
}

namespace {

// Rebuilds `t` with `f(child, depth_increment)` applied to each child,
// sharing the original node when nothing changed.
template <class F>
Term map_children(const Term& t, F&& f) {
  Term out = t;
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    const Term& c = t.child(i);
    if (!c) continue;
    Term nc = f(c, binds_child(t.tag(), i) ? 1u : 0u);
    if (!nc.same_node(c)) out = out.with_child(i, std::move(nc));
  }
  return out;
}

Term shift_rec(const Term& t, std::uint32_t cutoff, std::int64_t delta) {
  if (t.free_bound() <= cutoff) return t;
  if (t.is(Tag::Var)) {
    std::int64_t k = static_cast<std::int64_t>(t.index()) + delta;
    if (k < 0) throw std::logic_error("shift produced a negative de Bruijn index");
    return Term::var(static_cast<std::uint32_t>(k), t.name());
  }
  return map_children(t, [&](const Term& c, std::uint32_t d) { return shift_rec(c, cutoff + d, delta); });
}

Term subst_rec(const Term& t, std::uint32_t target, const Term& replacement, std::uint32_t depth) {
  if (t.free_bound() <= target + depth) return t;
  if (t.is(Tag::Var)) {
    if (t.index() == target + depth) return depth == 0 ? replacement : shift_rec(replacement, 0, depth);
    return t;
  }
  return map_children(
      t, [&](const Term& c, std::uint32_t d) { return subst_rec(c, target, replacement, depth + d); });
}

// body[depth := arg] with indices above `depth` lowered by one.
Term inst_rec(const Term& t, const Term& arg, std::uint32_t depth) {
  if (t.free_bound() <= depth) return t;
  if (t.is(Tag::Var)) {
    if (t.index() == depth) return depth == 0 ? arg : shift_rec(arg, 0, depth);
    return Term::var(t.index() - 1, t.name());
  }
  return map_children(t, [&](const Term& c, std::uint32_t d) { return inst_rec(c, arg, depth + d); });
}

void collect_free(const Term& t, std::uint32_t depth, std::set<std::uint32_t>& out) {
  if (!t || t.free_bound() <= depth) return;
  if (t.is(Tag::Var)) {
    out.insert(t.index() - depth);
    return;
  }
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    collect_free(t.child(i), depth + (binds_child(t.tag(), i) ? 1 : 0), out);
  }
}

bool occurs_rec(const Term& t, std::uint32_t index) {
  if (!t || t.free_bound() <= index) return false;
  if (t.is(Tag::Var)) return t.index() == index;
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    if (occurs_rec(t.child(i), index + (binds_child(t.tag(), i) ? 1 : 0))) return true;
  }
  return false;
}

}  // namespace

Term shift(const Term& t, std::uint32_t cutoff, std::int64_t delta) {
  if (delta == 0 || !t) return t;
  return shift_rec(t, cutoff, delta);
}

Term substitute(const Term& body, std::uint32_t target, const Term& replacement) {
  if (!body) return body;
  return subst_rec(body, target, replacement, 0);
}

Term instantiate(const Term& body, const Term& arg) {
  if (!body) return body;
  return inst_rec(body, arg, 0);
}

std::set<std::uint32_t> free_variables(const Term& t) {
  std::set<std::uint32_t> out;
  collect_free(t, 0, out);
  return out;
}

bool occurs_free(const Term& t, std::uint32_t index) { return occurs_rec(t, index); }

Term subterm_at(const Term& t, const Path& path) {
  Term cur = t;
  for (std::uint8_t i : path) {
    if (!cur || i >= cur.child_count()) return Term();
    cur = cur.child(i);
  }
  return cur;
}

Term replace_at(const Term& t, const Path& path, std::size_t offset, const Term& replacement) {
  if (offset == path.size()) return replacement;
  std::uint8_t i = path[offset];
  if (!t || i >= t.child_count()) throw std::out_of_range("replace_at: invalid path");
  return t.with_child(i, replace_at(t.child(i), path, offset + 1, replacement));
}

Term erase_annotations(const Term& t) {
  if (!t) return t;
  Term out = map_children(t, [](const Term& c, std::uint32_t) { return erase_annotations(c); });
  if (out.is(Tag::Lam) && out.annotation()) out = out.with_child(0, Term());
  if (out.is(Tag::Pair) && out.annotation()) out = out.with_child(2, Term());
  return out;
}

}  // namespace cube
