#ifndef CUBE_SURFACE_HPP
#define CUBE_SURFACE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cube/expected.hpp"
#include "cube/kernel.hpp"
#include "cube/reduction.hpp"
#include "cube/term.hpp"

namespace cube {

// Concrete syntax (ASCII, with Unicode aliases in brackets):
//
//   term    ::= binder | arrow ['as' term]
//   binder  ::= '\' params '.' term             [λ]   lambda
//             | '/\' params '.' term            [Λ]   type lambda, binder type Star
//             | 'Pi' params '.' term            [Π]
//             | 'Sig' params '.' term           [Σ]
//             | 'forall' params '.' term        [∀]   Pi, binder type Star
//   params  ::= idents [':' term] | ('(' idents ':' term ')')+
//
// Pi and Sig need a binder type. An annotation ends at the first '.' that
// is not inside a nested binder.
//   arrow   ::= product ['->' term]              [→]   right associative
//   product ::= app ['&' product]                [×]   non-dependent pair type
//   app     ::= postfix+ [binder]                      left associative
//   postfix ::= atom ('.1' | '.2')*
//   atom    ::= ident | number | '*' | 'Star' [⋆] | 'Box' [n] [□] | 'Type' n
//             | 'Unit' | 'Void' | 'Bool' | 'true' | 'false' | 'if' | 'absurd'
//             | '(' term ')' | '(' term ',' term ['as' term] ')'
//
// A number n in term position stands for the untyped Church numeral
// \f x. f (... (f x)). Comments start with '--'.

struct SourcePos {
  std::uint32_t line = 1;
  std::uint32_t column = 1;
  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

struct SourceSpan {
  std::string file;
  SourcePos start;
  SourcePos end;
};

struct ParseError {
  std::string message;
  SourceSpan span;
  std::vector<std::string> expected;

  std::string format() const;
};

using SpanTable = std::map<Path, SourceSpan>;

/// A definition visible to the parser; references are inlined.
struct DefinitionRef {
  Term term;
  std::size_t depth = 0;  // number of scope names `term` was elaborated under
};

struct ParseEnv {
  // Names in scope, outermost first (usually the typing context).
  std::vector<std::string> scope;
  std::map<std::string, DefinitionRef> definitions;
  // Symbols treated as constants in addition to the builtin keywords.
  std::set<std::string> constants;
  // Unresolved identifiers become free variables outside `scope`;
  // otherwise they are a parse error.
  bool allow_free = true;
  std::string file = "<input>";
  SourcePos origin;
};

struct ParsedTerm {
  Term term;
  // Free identifiers, outermost first. They sit outside the env's scope.
  std::vector<std::string> free_names;
  SpanTable spans;

  // Every name the term's free indices refer to, outermost first.
  std::vector<std::string> names(const ParseEnv& env) const;
};

Expected<ParsedTerm, ParseError> parse_term(std::string_view input, const ParseEnv& env = {});

/// Reserved words that cannot be used as variable names.
const std::set<std::string>& reserved_words();

/// Renders `t` with binder names taken from display hints, renamed where
/// they would clash with a name in scope. `names` lists the names of the
/// free indices, outermost first. parse_term on the result gives back a
/// term α-equal to `t`.
std::string print_term(const Term& t, const std::vector<std::string>& names = {});

/// `error[RULE]: <message> at <path>`.
std::string format_diagnostic(const Diagnostic& d);

/// One line per step: `<step#> <rule> @<path>  <term>`.
std::string render_trace(const ReductionTrace& trace, const std::vector<std::string>& names = {});

// Definition files:
//
//   def <name> [in <spec>] [: <type>] := <term>
//   assume <name> : <type>
//
// An entry continues on following lines that start with whitespace.
// Earlier definitions are inlined into later ones; assumptions extend the
// scope of every entry after them.

struct DefEntry {
  enum class Kind { Define, Assume };
  Kind kind = Kind::Define;
  std::string name;
  std::optional<std::string> spec;
  Term type;  // null when a definition has no declared type
  Term term;  // null for assumptions
  // Assumptions in scope for this entry (the entry's context size).
  std::size_t depth = 0;
  std::vector<std::string> free_names;
  std::uint32_t line = 0;
};

struct DefFile {
  std::vector<DefEntry> entries;
  std::vector<std::string> assumptions;  // all assumption names, in order
};

Expected<DefFile, ParseError> parse_defs(std::string_view input, const ParseEnv& env = {});

}  // namespace cube

#endif
