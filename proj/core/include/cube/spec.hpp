#ifndef CUBE_SPEC_HPP
#define CUBE_SPEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cube/sort.hpp"
#include "cube/term.hpp"

namespace cube {

struct Axiom {
  SortId sort;
  SortId type;  // sort : type
  friend bool operator==(const Axiom&, const Axiom&) = default;
};

/// Π-formation rule (domain sort, codomain sort, result sort).
struct PiRule {
  SortId domain;
  SortId codomain;
  SortId result;
  friend bool operator==(const PiRule&, const PiRule&) = default;
  friend auto operator<=>(const PiRule&, const PiRule&) = default;
};

struct Extensions {
  bool pairs = false;       // non-dependent products A & B, pairs, projections
  bool sigma = false;       // dependent Σ-types
  bool unit = false;        // Unit and its value *
  bool void_type = false;   // Void and absurd
  bool booleans = false;    // Bool, true, false, if
  bool cumulative = false;  // Type i usable where Type j is expected, i ≤ j
};

/// Infinite sort families beyond the explicitly listed sorts.
enum class Ladder {
  None,
  Boxes,      // ⋆ : □_1 : □_2 : ...
  Universes,  // Type 0 : Type 1 : ...
};

struct ConstantDecl {
  std::string name;
  Term type;  // closed
};

/// A pure type system specification (Sorts, Axioms, Rules) plus extensions.
struct PtsSpec {
  std::string name;
  std::vector<SortId> sorts;
  std::vector<Axiom> axioms;
  std::vector<PiRule> rules;
  Extensions ext;
  Ladder ladder = Ladder::None;
  // Constants registered on top of the builtin ones enabled by `ext`.
  std::vector<ConstantDecl> constants;
  // Set for specifications known to be logically inconsistent (Type : Type).
  bool inconsistent = false;

  bool has_sort(const SortId& s) const;
  std::optional<SortId> axiom_for(const SortId& s) const;
  std::optional<SortId> rule_for(const SortId& domain, const SortId& codomain) const;
  // Σ-formation reuses the Π rules, minus those whose result sort lies
  // below the domain sort (strong impredicative sums are excluded).
  std::optional<SortId> sigma_rule_for(const SortId& first, const SortId& second) const;
  // Sort inhabited by Unit, Void and Bool.
  SortId base_sort() const;
  // Builtin constants enabled by the extension flags, then registered ones.
  std::vector<ConstantDecl> all_constants() const;
  std::optional<Term> constant_type(std::string_view name) const;
};

enum class CubeCorner { Arrow, Two, WeakOmega, Omega, P, P2, WeakPOmega, POmega };

inline constexpr CubeCorner kAllCorners[] = {CubeCorner::Arrow, CubeCorner::Two, CubeCorner::WeakOmega,
                                             CubeCorner::Omega, CubeCorner::P,   CubeCorner::P2,
                                             CubeCorner::WeakPOmega, CubeCorner::POmega};

std::string_view corner_name(CubeCorner c);
std::optional<CubeCorner> parse_corner(std::string_view name);

/// One of the eight λ-cube corners: sorts {⋆, □}, axiom ⋆ : □, and the
/// corner's Π rules. Pairs, Unit and Void are enabled everywhere; dependent
/// Σ on the corners with (⋆, □).
PtsSpec cube_spec(CubeCorner corner);

/// λPω with the indexed ladder ⋆ : □_1 : □_2 : ...
PtsSpec coc_spec();

/// Predicative universes Type 0 : Type 1 : ..., with Σ, pairs, Unit, Void
/// and Bool. `max_level_display` bounds the levels listed in `sorts`; the
/// ladder itself is unbounded.
PtsSpec itt_spec(std::uint32_t max_level_display = 3, bool cumulative = false);

/// The inconsistent Type : Type system (⋆ : ⋆). Accepted by the kernel;
/// conversion under it may exhaust its fuel.
PtsSpec lambda_star_spec();

/// Accepts arrow|two|weak-omega|omega|P|P2|weak-Pomega|Pomega|coc|itt|
/// itt-cumulative|lambda-star.
std::optional<PtsSpec> spec_by_name(std::string_view name);
std::vector<std::string> spec_names();

}  // namespace cube

#endif
