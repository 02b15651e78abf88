#ifndef CUBE_KERNEL_HPP
#define CUBE_KERNEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cube/expected.hpp"
#include "cube/reduction.hpp"
#include "cube/spec.hpp"
#include "cube/term.hpp"

namespace cube {

struct Decl {
  std::string name;
  Term type;  // scoped over the declarations before it
};

/// Typing environment Γ. Declarations are ordered outermost first, so the
/// last declaration is de Bruijn index 0.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<Decl> decls) : decls_(std::move(decls)) {}

  Context extended(std::string name, Term type) const;
  void push(std::string name, Term type) { decls_.push_back({std::move(name), std::move(type)}); }
  void pop() { decls_.pop_back(); }

  std::size_t size() const { return decls_.size(); }
  bool empty() const { return decls_.empty(); }
  const std::vector<Decl>& decls() const { return decls_; }
  const Decl& operator[](std::size_t i) const { return decls_[i]; }

  // Type of Var(index), shifted into the full context.
  std::optional<Term> lookup(std::uint32_t index) const;
  std::vector<std::string> names() const;
  // Index of the innermost declaration with this name.
  std::optional<std::uint32_t> find(const std::string& name) const;

 private:
  std::vector<Decl> decls_;
};

enum class DiagnosticKind {
  UnboundVariable,
  RuleNotAllowed,
  TypeMismatch,
  NotAFunction,
  NotAPair,
  AxiomMissing,
  UniverseError,
  MissingAnnotation,
  FuelExhausted,
};

std::string_view diagnostic_kind_name(DiagnosticKind kind);

/// A kernel rejection: the first failure met during synthesis.
struct Diagnostic {
  DiagnosticKind kind;
  Path location;     // relative to the checked term
  std::string rule;  // typing rule label: VAR, SORT, PI, ABS, APP, ...
  std::string message;
  Term expected;  // TypeMismatch
  Term found;     // TypeMismatch, NotAFunction, NotAPair, UniverseError
  std::optional<std::pair<SortId, SortId>> rule_pair;  // RuleNotAllowed
  std::vector<std::string> scope;  // context names at the failure, outermost first
  std::optional<std::size_t> declaration;  // wf_context: failing declaration
};

struct KernelOptions {
  std::size_t fuel = kDefaultFuel;  // per normalization inside conversion
};

/// Type synthesis for Church-style terms over `spec`. Typing is modulo
/// β-conversion (normalize and compare).
///
/// For an application `f a` with `f : Πx:A.B` the result is B[x := a].
Expected<Term, Diagnostic> infer(const PtsSpec& spec, const Context& ctx, const Term& t,
                                 const KernelOptions& options = {});

/// Succeeds iff the synthesized type of `t` converts to (or, with
/// cumulative universes, is subsumed by) `against`.
Expected<Ok, Diagnostic> check(const PtsSpec& spec, const Context& ctx, const Term& t, const Term& against,
                               const KernelOptions& options = {});

/// β-normal form; FuelExhausted diagnostic if none is reached in `fuel` steps.
Expected<Term, Diagnostic> beta_normal_form(const Term& t, std::size_t fuel = kDefaultFuel);

/// α-equality of β-normal forms.
Expected<bool, Diagnostic> conv(const Term& a, const Term& b, std::size_t fuel = kDefaultFuel);

/// `found` converts to `expected`, or is below it in the universe order
/// when `spec` has cumulative universes.
Expected<bool, Diagnostic> subsumes(const PtsSpec& spec, const Term& found, const Term& expected,
                                    std::size_t fuel = kDefaultFuel);

/// Each declared type must be classified by a sort of `spec` in the prefix before it.
Expected<Ok, Diagnostic> wf_context(const PtsSpec& spec, const Context& ctx, const KernelOptions& options = {});

}  // namespace cube

#endif
