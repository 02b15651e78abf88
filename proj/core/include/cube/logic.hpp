#ifndef CUBE_LOGIC_HPP
#define CUBE_LOGIC_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cube/expected.hpp"
#include "cube/kernel.hpp"
#include "cube/spec.hpp"
#include "cube/term.hpp"

namespace cube {

/// Propositional and first-order formulas read as types.
struct Formula {
  enum class Kind { Atom, Implies, And, Or, Not, Falsum, Verum, Forall, Exists };
  Kind kind = Kind::Verum;
  std::string name;               // atom or bound variable
  std::vector<std::string> args;  // atom arguments (bound variables)
  std::string domain;             // quantifier domain, a type atom
  std::shared_ptr<const Formula> lhs;
  std::shared_ptr<const Formula> rhs;

  static Formula atom(std::string name, std::vector<std::string> args = {});
  static Formula implies(Formula a, Formula b);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula negation(Formula a);
  static Formula falsum();
  static Formula verum();
  static Formula forall(std::string var, std::string domain, Formula body);
  static Formula exists(std::string var, std::string domain, Formula body);
};

std::string to_string(const Formula& f);

/// Syntax: atoms `A`, `P x y`; `~A`; `A & B`; `A | B`; `A -> B` (right
/// associative); `False`; `True`; `forall x:D. F`; `exists x:D. F`.
/// Precedence from tight to loose: ~, &, |, ->.
Expected<Formula, std::string> parse_formula(std::string_view text);

/// A formula translated into a type over a context declaring its atoms:
/// quantifier domains first (`D : Star`), then propositions and predicates
/// (`A : Star`, `P : D -> Star`) in order of first appearance.
struct EncodedFormula {
  Context context;
  Term type;
};

/// A & B becomes A & B (a product), A -> B a function type, ~A is A -> Void,
/// False is Void, True is Unit, forall is Pi, exists is Sig, and
/// A | B is Pi c:Star. (A -> c) -> (B -> c) -> c.
Expected<EncodedFormula, std::string> formula_to_type(const Formula& f);

/// Checks `proof` (scoped over the formula's atom context) against the
/// formula's type.
Expected<Ok, Diagnostic> check_proof(const PtsSpec& spec, const Formula& f, const Term& proof);

struct FragmentUnsupported {
  std::string construct;
};

struct InhabitOptions {
  std::size_t max_depth = 12;
  std::size_t budget = 200000;  // search nodes before giving up
};

/// Bounded search for a β-normal η-long proof of an implication/conjunction
/// formula. `depth` bounds the nesting of hypothesis eliminations; a result
/// of nullopt means no proof exists within that bound.
Expected<std::optional<Term>, FragmentUnsupported> inhabit(const Formula& f, std::size_t depth,
                                                           const InhabitOptions& options = {});

/// The spec a formula needs: arrow for the implication/conjunction fragment,
/// two once disjunction appears, P2 for quantifiers.
PtsSpec formula_spec(const Formula& f);

struct ProofEntry {
  std::string name;
  std::string formula;
  std::string proof;  // surface syntax, scoped over the atom context
  std::string spec;
};

/// Hand-written proofs of standard intuitionistic tautologies.
const std::vector<ProofEntry>& proof_library();

}  // namespace cube

#endif
