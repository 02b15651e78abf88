#ifndef CUBE_REDUCTION_HPP
#define CUBE_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "cube/expected.hpp"
#include "cube/term.hpp"

namespace cube {

/// Evaluation strategies.
///
/// All three strategies run to a full normal form when one is reachable
/// along their path; they differ in which redex they contract first.
///
///  - NormalOrder contracts the leftmost-outermost redex, anywhere,
///    including under binders and inside type annotations.
///  - CallByName contracts weak-head redexes first, never touching
///    arguments or bodies until the head is stuck, then continues into the
///    subterms from left to right. On this term language it visits redexes
///    in the same order as NormalOrder; it is implemented separately so the
///    two can be cross-checked.
///  - CallByValue evaluates arguments before the function and the outer
///    redex (E-APP2 before E-APP1, i.e. rightmost first), and treats λ as a
///    value: it does not reduce under a binder while an enclosing redex is
///    pending. Once the whole term is a value or a stuck application, it
///    continues into subterms, right to left, so that normal forms are full
///    β-normal forms. Terms such as (λx.y)(ωω) diverge under it.
enum class Strategy { CallByValue, CallByName, NormalOrder };

/// Contraction rules. IfTrue/IfFalse are the computation rules of the
/// primitive booleans (`if A true a b ⇝ a`).
enum class Rule { Beta, ProjL, ProjR, IfTrue, IfFalse };

std::string_view rule_name(Rule rule);
std::string_view strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view text);

struct Step {
  Term term;  // the reduct
  Path path;  // position of the contracted redex in the previous term
  Rule rule;
};

struct Outcome {
  enum class Kind { NormalForm, FuelExhausted, LoopDetected };
  Kind kind;
  Term term;               // the normal form, or the last term reached
  std::size_t period = 0;  // cycle length for LoopDetected
};

struct ReductionTrace {
  Term start;
  std::vector<Step> steps;  // empty when recording is disabled
  std::size_t step_count = 0;
  Outcome outcome;

  bool normalized() const { return outcome.kind == Outcome::Kind::NormalForm; }
  // Term at trace position i (0 is the start term).
  const Term& term_at(std::size_t i) const { return i == 0 ? start : steps[i - 1].term; }
};

struct NormalizeOptions {
  // Number of previous terms compared (by α-equality) against each new
  // term for loop detection. 0 disables loop detection.
  std::size_t loop_window = 64;
  bool record_steps = true;
};

constexpr std::size_t kDefaultFuel = 10000;

/// The rule under which `t` itself is a redex, if any.
std::optional<Rule> redex_rule(const Term& t);

/// Contracts the redex at the root of `t`.
std::optional<Step> contract(const Term& t);

/// Contracts the redex at `path`; nothing if there is no redex there.
std::optional<Term> reduce_at(const Term& t, const Path& path);

/// All redex positions, leftmost-outermost (preorder) first.
std::vector<Path> redex_positions(const Term& t);

/// One step under `s`, or nothing if `t` is a normal form for `s`.
std::optional<Step> step(const Term& t, Strategy s);

/// Repeatedly steps `t` until a normal form, a detected loop, or `fuel`
/// steps have been taken.
ReductionTrace normalize(const Term& t, Strategy s, std::size_t fuel = kDefaultFuel,
                         const NormalizeOptions& options = {});

struct FuelExhausted {
  std::size_t steps = 0;
  Term last;
};

/// Steps `(fixpoint f)` in normal order until it has the shape
/// f (f (... X)) with `unfoldings` leading applications of `f`.
Expected<Term, FuelExhausted> fixed_point_unfold(const Term& fixpoint, const Term& f, std::size_t unfoldings,
                                                 std::size_t budget = 1000);

}  // namespace cube

#endif
