#ifndef CUBE_TERM_HPP
#define CUBE_TERM_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cube/sort.hpp"

namespace cube {

enum class Tag : std::uint8_t { Var, Sort, Lam, Pi, Sigma, App, Pair, Proj, Const };

/// Position of a subterm: the sequence of child indices from the root.
///
/// Child numbering: Lam {0: annotation, 1: body}; Pi and Sigma
/// {0: domain, 1: codomain}; App {0: function, 1: argument};
/// Pair {0: first, 1: second, 2: annotation}; Proj {0: pair}.
using Path = std::vector<std::uint8_t>;

std::string format_path(const Path& path);

/// Immutable term of the unified PTS language.
///
/// Variables are de Bruijn indices; binder names and variable names are
/// display hints only and never take part in equality. A default
/// constructed Term is null and is used for absent annotations.
class Term {
 public:
  Term() = default;

  static Term var(std::uint32_t index, std::string hint = {});
  static Term sort(SortId s);
  static Term star() { return sort(SortId::star()); }
  static Term box(std::uint32_t level = 1) { return sort(SortId::box(level)); }
  static Term universe(std::uint32_t level) { return sort(SortId::universe(level)); }
  static Term lam(std::string binder, Term annotation, Term body);
  static Term lam(std::string binder, Term body) { return lam(std::move(binder), Term(), std::move(body)); }
  static Term pi(std::string binder, Term domain, Term codomain);
  // Non-dependent function type. `codomain` is given in the outer scope.
  static Term arrow(Term domain, Term codomain);
  static Term sigma(std::string binder, Term first, Term second);
  // Non-dependent product type. `second` is given in the outer scope.
  static Term product(Term first, Term second);
  static Term app(Term fun, Term arg);
  static Term apps(Term fun, std::initializer_list<Term> args);
  static Term pair(Term first, Term second, Term annotation = Term());
  static Term proj(int which, Term pair);
  static Term constant(std::string name);

  bool is_null() const;
  explicit operator bool() const;

  Tag tag() const;
  bool is(Tag t) const;

  std::uint32_t index() const;
  int which() const;
  const SortId& sort_id() const;
  // Binder name, variable hint, or constant symbol.
  const std::string& name() const;

  std::size_t child_count() const;
  const Term& child(std::size_t i) const;

  const Term& annotation() const;
  const Term& body() const;
  const Term& domain() const;
  const Term& codomain() const;
  const Term& fun() const;
  const Term& arg() const;
  const Term& first() const;
  const Term& second() const;
  const Term& pair_term() const;

  // Number of nodes.
  std::size_t size() const;
  // Structural hash, invariant under renaming of binders.
  std::uint64_t hash() const;
  // One more than the largest free index; 0 for closed terms.
  std::uint32_t free_bound() const;

  bool same_node(const Term& other) const;

  // Copy with child `i` replaced.
  Term with_child(std::size_t i, Term replacement) const;

 private:
  struct Node;

  static Term make(Tag tag, std::uint32_t index, SortId sort, std::string name,
                   std::initializer_list<Term> children);

  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Tag tag;
  std::uint8_t arity = 0;
  std::uint32_t index = 0;
  std::uint32_t free_bound = 0;
  std::size_t size = 1;
  std::uint64_t hash = 0;
  SortId sort = SortId::star();
  std::string name;
  std::array<Term, 3> children;
};

inline bool Term::is_null() const { return node_ == nullptr; }
inline Term::operator bool() const { return node_ != nullptr; }
inline Tag Term::tag() const { return node_->tag; }
inline bool Term::is(Tag t) const { return node_ && node_->tag == t; }
inline std::uint32_t Term::index() const { return node_->index; }
inline int Term::which() const { return static_cast<int>(node_->index); }
inline const SortId& Term::sort_id() const { return node_->sort; }
inline const std::string& Term::name() const { return node_->name; }
inline std::size_t Term::child_count() const { return node_->arity; }
inline const Term& Term::child(std::size_t i) const { return node_->children[i]; }
inline const Term& Term::annotation() const { return node_->children[node_->tag == Tag::Pair ? 2 : 0]; }
inline const Term& Term::body() const { return node_->children[1]; }
inline const Term& Term::domain() const { return node_->children[0]; }
inline const Term& Term::codomain() const { return node_->children[1]; }
inline const Term& Term::fun() const { return node_->children[0]; }
inline const Term& Term::arg() const { return node_->children[1]; }
inline const Term& Term::first() const { return node_->children[0]; }
inline const Term& Term::second() const { return node_->children[1]; }
inline const Term& Term::pair_term() const { return node_->children[0]; }
inline std::size_t Term::size() const { return node_ ? node_->size : 0; }
inline std::uint64_t Term::hash() const { return node_ ? node_->hash : 0; }
inline std::uint32_t Term::free_bound() const { return node_ ? node_->free_bound : 0; }
inline bool Term::same_node(const Term& other) const { return node_ == other.node_; }

/// True when the child slot `i` of a node tagged `tag` is under that node's binder.
bool binds_child(Tag tag, std::size_t i);

/// Structural equality modulo display hints, i.e. α-equivalence.
bool alpha_equal(const Term& a, const Term& b);

/// Adds `delta` to every index ≥ `cutoff`. Throws std::logic_error if an index
/// would become negative, which indicates a scoping bug in the caller.
Term shift(const Term& t, std::uint32_t cutoff, std::int64_t delta);

/// Replaces the variable with index `target` by `replacement`, shifting
/// `replacement` under binders so none of its free variables is captured.
/// Indices other than `target` are left untouched.
Term substitute(const Term& body, std::uint32_t target, const Term& replacement);

/// Instantiates the outermost binder of a body: body[0 := arg], with the
/// binder removed (indices above 0 drop by one).
Term instantiate(const Term& body, const Term& arg);

/// Free variable indices of `t`, relative to the scope at `t`'s root.
std::set<std::uint32_t> free_variables(const Term& t);

bool occurs_free(const Term& t, std::uint32_t index);

/// Subterm at `path`, or a null Term when the path does not exist.
Term subterm_at(const Term& t, const Path& path);

/// Copy of `t` with the subterm at `path` replaced.
Term replace_at(const Term& t, const Path& path, std::size_t offset, const Term& replacement);
inline Term replace_at(const Term& t, const Path& path, const Term& replacement) {
  return replace_at(t, path, 0, replacement);
}

/// Drops every type annotation (λ domains and pair annotations).
Term erase_annotations(const Term& t);

}  // namespace cube

#endif
