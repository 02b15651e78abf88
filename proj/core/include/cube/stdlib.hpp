#ifndef CUBE_STDLIB_HPP
#define CUBE_STDLIB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cube/expected.hpp"
#include "cube/reduction.hpp"
#include "cube/term.hpp"

namespace cube {

struct NamedDef {
  std::string name;
  Term term;
  std::string spec;  // empty for untyped definitions
  Term type;         // null when untyped
  std::string doc;
};

/// Source text of the standard library in definition-file syntax.
std::string_view stdlib_source();

/// The standard library, in definition order. Later entries may use earlier
/// ones; references are already inlined.
const std::vector<NamedDef>& stdlib();

std::optional<NamedDef> stdlib_lookup(std::string_view name);

/// \f x. f (... (f x)) with n applications.
Term church_numeral(std::uint64_t n);

/// /\a. \f:a -> a. \x:a. f (... (f x)), of type church_nat_type().
Term typed_church_numeral(std::uint64_t n);

/// Pi a:Star. (a -> a) -> a -> a
Term church_nat_type();

struct NotANumeral {
  std::string reason;
};

/// Normalizes `t` and reads n off the shape \f x. f (... (f x)). A leading
/// type abstraction, as in typed numerals, is skipped.
Expected<std::uint64_t, NotANumeral> church_decode(const Term& t, std::size_t fuel = kDefaultFuel);

/// I, K, S, omega, Omega, Y, Theta, triple-omega.
std::optional<NamedDef> combinator(std::string_view name);

}  // namespace cube

#endif
