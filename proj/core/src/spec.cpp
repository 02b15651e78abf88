#include "cube/spec.hpp"

#include <algorithm>

namespace cube {

bool PtsSpec::has_sort(const SortId& s) const {
  if (std::find(sorts.begin(), sorts.end(), s) != sorts.end()) return true;
  if (ladder == Ladder::Boxes) return s.is_star() || s.is_box();
  if (ladder == Ladder::Universes) return s.is_universe();
  return false;
}

std::optional<SortId> PtsSpec::axiom_for(const SortId& s) const {
  if (!has_sort(s)) return std::nullopt;
  for (const Axiom& a : axioms) {
    if (a.sort == s) return a.type;
  }
  if (ladder == Ladder::Boxes && s.is_box()) return SortId::box(s.level() + 1);
  if (ladder == Ladder::Universes && s.is_universe()) return SortId::universe(s.level() + 1);
  return std::nullopt;
}

std::optional<SortId> PtsSpec::rule_for(const SortId& domain, const SortId& codomain) const {
  if (!has_sort(domain) || !has_sort(codomain)) return std::nullopt;
  for (const PiRule& r : rules) {
    if (r.domain == domain && r.codomain == codomain) return r.result;
  }
  if (ladder == Ladder::Boxes) {
    // Match on the ⋆/□ class, then take the larger box level.
    auto cls = [](const SortId& s) { return s.is_box() ? SortId::box(1) : s; };
    for (const PiRule& r : rules) {
      if (r.domain == cls(domain) && r.codomain == cls(codomain)) {
        if (r.result.is_star()) return r.result;
        return SortId::box(std::max(domain.is_box() ? domain.level() : 1u, codomain.is_box() ? codomain.level() : 1u));
      }
    }
  }
  if (ladder == Ladder::Universes && domain.is_universe() && codomain.is_universe()) {
    return SortId::universe(std::max(domain.level(), codomain.level()));
  }
  return std::nullopt;
}

std::optional<SortId> PtsSpec::sigma_rule_for(const SortId& first, const SortId& second) const {
  auto r = rule_for(first, second);
  if (!r) return std::nullopt;
  if (first.rank() > r->rank()) return std::nullopt;
  return r;
}

SortId PtsSpec::base_sort() const {
  if (ladder == Ladder::Universes) return SortId::universe(0);
  if (has_sort(SortId::star())) return SortId::star();
  return sorts.empty() ? SortId::star() : sorts.front();
}

std::vector<ConstantDecl> PtsSpec::all_constants() const {
  std::vector<ConstantDecl> out;
  Term base = Term::sort(base_sort());
  if (ext.unit) {
    out.push_back({"Unit", base});
    out.push_back({"*", Term::constant("Unit")});
  }
  if (ext.void_type) {
    out.push_back({"Void", base});
    // absurd : Π a:base. Void -> a
    out.push_back({"absurd", Term::pi("a", base, Term::pi("_", Term::constant("Void"), Term::var(1, "a")))});
  }
  if (ext.booleans) {
    out.push_back({"Bool", base});
    out.push_back({"true", Term::constant("Bool")});
    out.push_back({"false", Term::constant("Bool")});
    // if : Π a:base. Bool -> a -> a -> a
    Term tail = Term::pi("_", Term::constant("Bool"),
                         Term::pi("_", Term::var(1, "a"), Term::pi("_", Term::var(2, "a"), Term::var(3, "a"))));
    out.push_back({"if", Term::pi("a", base, tail)});
  }
  out.insert(out.end(), constants.begin(), constants.end());
  return out;
}

std::optional<Term> PtsSpec::constant_type(std::string_view name) const {
  // Registered constants shadow builtins.
  for (auto it = constants.rbegin(); it != constants.rend(); ++it) {
    if (it->name == name) return it->type;
  }
  for (const ConstantDecl& c : all_constants()) {
    if (c.name == name) return c.type;
  }
  return std::nullopt;
}

std::string_view corner_name(CubeCorner c) {
  switch (c) {
    case CubeCorner::Arrow:
      return "arrow";
    case CubeCorner::Two:
      return "two";
    case CubeCorner::WeakOmega:
      return "weak-omega";
    case CubeCorner::Omega:
      return "omega";
    case CubeCorner::P:
      return "P";
    case CubeCorner::P2:
      return "P2";
    case CubeCorner::WeakPOmega:
      return "weak-Pomega";
    case CubeCorner::POmega:
      return "Pomega";
  }
  return "?";
}

std::optional<CubeCorner> parse_corner(std::string_view name) {
  for (CubeCorner c : kAllCorners) {
    if (corner_name(c) == name) return c;
  }
  return std::nullopt;
}

PtsSpec cube_spec(CubeCorner corner) {
  const SortId star = SortId::star();
  const SortId box = SortId::box(1);
  PtsSpec spec;
  spec.name = std::string(corner_name(corner));
  spec.sorts = {star, box};
  spec.axioms = {{star, box}};
  spec.rules = {{star, star, star}};

  bool poly = false, op = false, dep = false;  // (□,⋆) (□,□) (⋆,□)
  switch (corner) {
    case CubeCorner::Arrow:
      break;
    case CubeCorner::Two:
      poly = true;
      break;
    case CubeCorner::WeakOmega:
      op = true;
      break;
    case CubeCorner::Omega:
      poly = op = true;
      break;
    case CubeCorner::P:
      dep = true;
      break;
    case CubeCorner::P2:
      dep = poly = true;
      break;
    case CubeCorner::WeakPOmega:
      dep = op = true;
      break;
    case CubeCorner::POmega:
      poly = op = dep = true;
      break;
  }
  if (poly) spec.rules.push_back({box, star, star});
  if (dep) spec.rules.push_back({star, box, box});
  if (op) spec.rules.push_back({box, box, box});

  spec.ext.pairs = true;
  spec.ext.unit = true;
  spec.ext.void_type = true;
  spec.ext.sigma = dep;
  return spec;
}

PtsSpec coc_spec() {
  PtsSpec spec = cube_spec(CubeCorner::POmega);
  spec.name = "coc";
  spec.ladder = Ladder::Boxes;
  return spec;
}

PtsSpec itt_spec(std::uint32_t max_level_display, bool cumulative) {
  PtsSpec spec;
  spec.name = cumulative ? "itt-cumulative" : "itt";
  for (std::uint32_t i = 0; i <= max_level_display; ++i) spec.sorts.push_back(SortId::universe(i));
  spec.ladder = Ladder::Universes;
  spec.ext.pairs = true;
  spec.ext.sigma = true;
  spec.ext.unit = true;
  spec.ext.void_type = true;
  spec.ext.booleans = true;
  spec.ext.cumulative = cumulative;
  return spec;
}

PtsSpec lambda_star_spec() {
  const SortId star = SortId::star();
  PtsSpec spec;
  spec.name = "lambda-star";
  spec.sorts = {star};
  spec.axioms = {{star, star}};
  spec.rules = {{star, star, star}};
  spec.ext.pairs = true;
  spec.ext.unit = true;
  spec.ext.void_type = true;
  spec.inconsistent = true;
  return spec;
}

std::optional<PtsSpec> spec_by_name(std::string_view name) {
  if (auto c = parse_corner(name)) return cube_spec(*c);
  if (name == "coc") return coc_spec();
  if (name == "itt") return itt_spec();
  if (name == "itt-cumulative") return itt_spec(3, true);
  if (name == "lambda-star") return lambda_star_spec();
  return std::nullopt;
}

std::vector<std::string> spec_names() {
  std::vector<std::string> out;
  for (CubeCorner c : kAllCorners) out.emplace_back(corner_name(c));
  out.insert(out.end(), {"coc", "itt", "itt-cumulative", "lambda-star"});
  return out;
}

}  // namespace cube
